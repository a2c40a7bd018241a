#pragma once

/// @file monoid.hpp
/// @brief Commutative monoids and rigs used as dimension codomains, with a symbolic infinity.

#include "tandim/report.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tandim {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Nonnegative integer or the symbol ∞.
class NatInf {
public:
    NatInf() = default;
    NatInf(BigInt v) : value_(std::move(v)) {
        if (value_ < 0) throw UsageError("NatInf: negative value " + value_.str());
    }
    NatInf(long long v) : NatInf(BigInt(v)) {}
    NatInf(int v) : NatInf(BigInt(v)) {}
    NatInf(std::size_t v) : NatInf(BigInt(v)) {}

    static NatInf infinity() {
        NatInf n;
        n.infinite_ = true;
        return n;
    }

    bool is_infinite() const { return infinite_; }
    bool is_zero() const { return !infinite_ && value_ == 0; }
    const BigInt& value() const {
        if (infinite_) throw UsageError("NatInf: value() of infinity");
        return value_;
    }

    std::string str() const { return infinite_ ? "∞" : value_.str(); }

    friend bool operator==(const NatInf& a, const NatInf& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }
    friend bool operator<(const NatInf& a, const NatInf& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }

    friend NatInf operator+(const NatInf& a, const NatInf& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return NatInf(a.value_ + b.value_);
    }
    /// ∞ absorbs every element, including 0.
    friend NatInf operator*(const NatInf& a, const NatInf& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return NatInf(a.value_ * b.value_);
    }

private:
    bool infinite_ = false;
    BigInt value_ = 0;
};

inline NatInf max(const NatInf& a, const NatInf& b) { return a < b ? b : a; }

/// Positive integer or ∞.
class NatStarInf {
public:
    NatStarInf() : value_(1) {}
    NatStarInf(BigInt v) : value_(std::move(v)) {
        if (value_ <= 0) throw UsageError("NatStarInf: nonpositive value " + value_.str());
    }
    NatStarInf(long long v) : NatStarInf(BigInt(v)) {}
    NatStarInf(int v) : NatStarInf(BigInt(v)) {}

    static NatStarInf infinity() {
        NatStarInf n;
        n.infinite_ = true;
        return n;
    }

    bool is_infinite() const { return infinite_; }
    const BigInt& value() const {
        if (infinite_) throw UsageError("NatStarInf: value() of infinity");
        return value_;
    }
    std::string str() const { return infinite_ ? "∞" : value_.str(); }

    friend bool operator==(const NatStarInf& a, const NatStarInf& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }

    /// a divides b; everything divides ∞, ∞ divides only ∞.
    friend bool divides(const NatStarInf& a, const NatStarInf& b) {
        if (b.infinite_) return true;
        if (a.infinite_) return false;
        return b.value_ % a.value_ == 0;
    }

private:
    bool infinite_ = false;
    BigInt value_;
};

inline NatStarInf lcm(const NatStarInf& a, const NatStarInf& b) {
    if (a.is_infinite() || b.is_infinite()) return NatStarInf::infinity();
    return NatStarInf(boost::multiprecision::lcm(a.value(), b.value()));
}

/// Finite-support sequence of NatInf; trailing zeros are dropped so equality is structural.
class SeqNatInf {
public:
    SeqNatInf() = default;
    SeqNatInf(std::vector<NatInf> e) : entries_(std::move(e)) { trim(); }
    SeqNatInf(std::initializer_list<long long> e) {
        for (auto v : e) entries_.emplace_back(v);
        trim();
    }

    std::size_t support() const { return entries_.size(); }
    NatInf at(std::size_t n) const { return n < entries_.size() ? entries_[n] : NatInf(0); }
    const std::vector<NatInf>& entries() const { return entries_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) s += ",";
            s += entries_[i].str();
        }
        return s + ")";
    }

    friend bool operator==(const SeqNatInf& a, const SeqNatInf& b) {
        return a.entries_ == b.entries_;
    }
    friend SeqNatInf operator+(const SeqNatInf& a, const SeqNatInf& b) {
        std::vector<NatInf> out(std::max(a.support(), b.support()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.at(i) + b.at(i);
        return SeqNatInf(std::move(out));
    }

private:
    void trim() {
        while (!entries_.empty() && entries_.back().is_zero()) entries_.pop_back();
    }
    std::vector<NatInf> entries_;
};

using DimValue = std::variant<NatInf, NatStarInf, BigInt, SeqNatInf>;

enum class Carrier { nat_inf = 0, nat_star_inf = 1, integer = 2, seq_nat_inf = 3 };

inline const char* carrier_name(Carrier c) {
    switch (c) {
        case Carrier::nat_inf: return "NatInf";
        case Carrier::nat_star_inf: return "NatStarInf";
        case Carrier::integer: return "Integer";
        case Carrier::seq_nat_inf: return "SeqNatInf";
    }
    return "?";
}

inline Carrier carrier_of(const DimValue& v) { return static_cast<Carrier>(v.index()); }

inline std::string to_string(const DimValue& v) {
    return std::visit([](const auto& x) -> std::string { return x.str(); }, v);
}

using BinaryOp = std::function<DimValue(const DimValue&, const DimValue&)>;

struct MonoidSpec {
    std::string tag;
    Carrier carrier = Carrier::nat_inf;
    BinaryOp op;
    DimValue unit;
    std::function<bool(const DimValue&, const DimValue&)> eq =
        [](const DimValue& a, const DimValue& b) { return a == b; };
    bool is_rig = false;
    BinaryOp mul;
    DimValue mul_unit;
    std::string symbol = "+";
};

inline void require_carrier(const MonoidSpec& m, const DimValue& v) {
    if (carrier_of(v) != m.carrier)
        throw UsageError("monoid '" + m.tag + "' expects " + carrier_name(m.carrier) +
                         " but got " + carrier_name(carrier_of(v)));
}

inline DimValue combine(const MonoidSpec& m, const DimValue& a, const DimValue& b) {
    require_carrier(m, a);
    require_carrier(m, b);
    return m.op(a, b);
}

inline DimValue combine_all(const MonoidSpec& m, const std::vector<DimValue>& xs) {
    DimValue acc = m.unit;
    for (const auto& x : xs) acc = combine(m, acc, x);
    return acc;
}

/// n-fold combination of a with itself (the unit for n = 0).
inline DimValue repeat(const MonoidSpec& m, const DimValue& a, std::size_t n) {
    DimValue acc = m.unit;
    for (std::size_t i = 0; i < n; ++i) acc = combine(m, acc, a);
    return acc;
}

inline DimValue rig_mul(const MonoidSpec& m, const DimValue& a, const DimValue& b) {
    if (!m.is_rig || !m.mul) throw UsageError("monoid '" + m.tag + "' is not a rig");
    require_carrier(m, a);
    require_carrier(m, b);
    return m.mul(a, b);
}

inline bool monoid_equal(const MonoidSpec& m, const DimValue& a, const DimValue& b) {
    require_carrier(m, a);
    require_carrier(m, b);
    return m.eq(a, b);
}

inline MonoidSpec nat_add() {
    MonoidSpec m;
    m.tag = "nat-add";
    m.carrier = Carrier::nat_inf;
    m.op = [](const DimValue& a, const DimValue& b) -> DimValue {
        return std::get<NatInf>(a) + std::get<NatInf>(b);
    };
    m.unit = NatInf(0);
    return m;
}

inline MonoidSpec nat_mul() {
    MonoidSpec m;
    m.tag = "nat-mul";
    m.carrier = Carrier::nat_inf;
    m.op = [](const DimValue& a, const DimValue& b) -> DimValue {
        return std::get<NatInf>(a) * std::get<NatInf>(b);
    };
    m.unit = NatInf(1);
    m.symbol = "·";
    return m;
}

inline MonoidSpec nat_max() {
    MonoidSpec m;
    m.tag = "nat-max";
    m.carrier = Carrier::nat_inf;
    m.op = [](const DimValue& a, const DimValue& b) -> DimValue {
        return max(std::get<NatInf>(a), std::get<NatInf>(b));
    };
    m.unit = NatInf(0);
    m.symbol = "max";
    return m;
}

inline MonoidSpec lcm_monoid() {
    MonoidSpec m;
    m.tag = "lcm";
    m.carrier = Carrier::nat_star_inf;
    m.op = [](const DimValue& a, const DimValue& b) -> DimValue {
        return lcm(std::get<NatStarInf>(a), std::get<NatStarInf>(b));
    };
    m.unit = NatStarInf(1);
    m.symbol = "lcm";
    return m;
}

inline MonoidSpec int_rig() {
    MonoidSpec m;
    m.tag = "int-rig";
    m.carrier = Carrier::integer;
    m.op = [](const DimValue& a, const DimValue& b) -> DimValue {
        return BigInt(std::get<BigInt>(a) + std::get<BigInt>(b));
    };
    m.unit = BigInt(0);
    m.is_rig = true;
    m.mul = [](const DimValue& a, const DimValue& b) -> DimValue {
        return BigInt(std::get<BigInt>(a) * std::get<BigInt>(b));
    };
    m.mul_unit = BigInt(1);
    return m;
}

inline MonoidSpec seq_add() {
    MonoidSpec m;
    m.tag = "seq-add";
    m.carrier = Carrier::seq_nat_inf;
    m.op = [](const DimValue& a, const DimValue& b) -> DimValue {
        return std::get<SeqNatInf>(a) + std::get<SeqNatInf>(b);
    };
    m.unit = SeqNatInf();
    return m;
}

inline std::vector<std::string> monoid_tags() {
    return {"nat-add", "nat-mul", "nat-max", "lcm", "int-rig", "seq-add"};
}

inline MonoidSpec monoid_by_tag(const std::string& tag) {
    if (tag == "nat-add") return nat_add();
    if (tag == "nat-mul") return nat_mul();
    if (tag == "nat-max") return nat_max();
    if (tag == "lcm") return lcm_monoid();
    if (tag == "int-rig") return int_rig();
    if (tag == "seq-add") return seq_add();
    throw UsageError("unknown monoid tag '" + tag + "'");
}

/// Commutativity, associativity and unit on all pairs/triples; distributivity for rigs.
/// Stops at the first failure of each law.
inline ViolationReport check_monoid_laws(const MonoidSpec& m, const std::vector<DimValue>& samples) {
    ViolationReport rep("monoid laws: " + m.tag);
    if (samples.empty()) throw UsageError("check_monoid_laws: empty sample list");
    for (const auto& s : samples) require_carrier(m, s);

    auto run = [&](const std::string& name, auto&& body) {
        bool ok = true;
        Json w = Json::object();
        std::string lhs, rhs;
        for (std::size_t i = 0; ok && i < samples.size(); ++i)
            for (std::size_t j = 0; ok && j < samples.size(); ++j)
                for (std::size_t k = 0; ok && k < samples.size(); ++k)
                    ok = body(samples[i], samples[j], samples[k], w, lhs, rhs);
        rep.expect(name, ok, w, lhs, rhs);
    };

    run("commutativity", [&](const DimValue& a, const DimValue& b, const DimValue&, Json& w,
                             std::string& l, std::string& r) {
        DimValue x = m.op(a, b), y = m.op(b, a);
        if (m.eq(x, y)) return true;
        w = {{"a", to_string(a)}, {"b", to_string(b)}};
        l = to_string(x);
        r = to_string(y);
        return false;
    });
    run("associativity", [&](const DimValue& a, const DimValue& b, const DimValue& c, Json& w,
                             std::string& l, std::string& r) {
        DimValue x = m.op(m.op(a, b), c), y = m.op(a, m.op(b, c));
        if (m.eq(x, y)) return true;
        w = {{"a", to_string(a)}, {"b", to_string(b)}, {"c", to_string(c)}};
        l = to_string(x);
        r = to_string(y);
        return false;
    });
    run("unit", [&](const DimValue& a, const DimValue&, const DimValue&, Json& w, std::string& l,
                    std::string& r) {
        DimValue x = m.op(m.unit, a);
        if (m.eq(x, a) && m.eq(m.op(a, m.unit), a)) return true;
        w = {{"a", to_string(a)}};
        l = to_string(x);
        r = to_string(a);
        return false;
    });
    if (m.is_rig) {
        run("distributivity", [&](const DimValue& a, const DimValue& b, const DimValue& c,
                                  Json& w, std::string& l, std::string& r) {
            DimValue x = m.mul(a, m.op(b, c)), y = m.op(m.mul(a, b), m.mul(a, c));
            if (m.eq(x, y)) return true;
            w = {{"a", to_string(a)}, {"b", to_string(b)}, {"c", to_string(c)}};
            l = to_string(x);
            r = to_string(y);
            return false;
        });
        run("mul-commutativity", [&](const DimValue& a, const DimValue& b, const DimValue&,
                                     Json& w, std::string& l, std::string& r) {
            DimValue x = m.mul(a, b), y = m.mul(b, a);
            if (m.eq(x, y)) return true;
            w = {{"a", to_string(a)}, {"b", to_string(b)}};
            l = to_string(x);
            r = to_string(y);
            return false;
        });
    }
    return rep;
}

}  // namespace tandim
