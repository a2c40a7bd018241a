#pragma once

/// @file finring.hpp
/// @brief Finite rings (unital or not), the three ring categories, characteristic as an
///        lcm-valued dimension, and the dual-numbers tangent structure.

#include "tandim/category.hpp"
#include "tandim/fingrp.hpp"
#include "tandim/tangent.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace tandim {

class RingImpl {
public:
    virtual ~RingImpl() = default;
    virtual std::size_t order() const = 0;
    virtual Elem add(Elem a, Elem b) const = 0;
    virtual Elem neg(Elem a) const = 0;
    virtual Elem zero() const = 0;
    virtual Elem mul(Elem a, Elem b) const = 0;
    virtual std::optional<Elem> one() const = 0;
    virtual std::string label(Elem a) const = 0;

    const std::string& key() const { return key_; }

    /// Generators of the additive group, smallest-first greedy. The closure grows coset by coset,
    /// H + ⟨g⟩ = ⋃ₖ (H + k·g), so the total cost is linear in the order.
    const std::vector<Elem>& additive_generators() const {
        std::call_once(once_, [this] {
            std::vector<char> in(order(), 0);
            in[zero()] = 1;
            std::vector<Elem> members{zero()};
            for (Elem x = 0; x < order(); ++x) {
                if (in[x]) continue;
                gens_.push_back(x);
                const std::size_t h = members.size();
                for (Elem kx = x; !in[kx]; kx = add(kx, x))
                    for (std::size_t i = 0; i < h; ++i) {
                        Elem z = add(members[i], kx);
                        in[z] = 1;
                        members.push_back(z);
                    }
            }
        });
        return gens_;
    }

    bool commutative() const {
        const auto& g = additive_generators();
        for (Elem a : g)
            for (Elem b : g)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    std::size_t additive_order(Elem x) const {
        std::size_t k = 1;
        for (Elem y = x; y != zero(); y = add(y, x)) ++k;
        return k;
    }

protected:
    std::string key_;

private:
    mutable std::once_flag once_;
    mutable std::vector<Elem> gens_;
};

using Ring = std::shared_ptr<const RingImpl>;

class TableRing : public RingImpl {
public:
    TableRing(std::string key, std::vector<std::string> labels, std::vector<Elem> add, std::vector<Elem> mul,
              Elem zero, std::optional<Elem> one)
        : labels_(std::move(labels)), add_(std::move(add)), mul_(std::move(mul)), zero_(zero), one_(one) {
        key_ = std::move(key);
        const std::size_t n = labels_.size();
        neg_.assign(n, 0);
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                if (add_[a * n + b] == zero_) neg_[a] = b;
    }
    std::size_t order() const override { return labels_.size(); }
    Elem add(Elem a, Elem b) const override { return add_[a * labels_.size() + b]; }
    Elem neg(Elem a) const override { return neg_[a]; }
    Elem zero() const override { return zero_; }
    Elem mul(Elem a, Elem b) const override { return mul_[a * labels_.size() + b]; }
    std::optional<Elem> one() const override { return one_; }
    std::string label(Elem a) const override { return labels_[a]; }

private:
    std::vector<std::string> labels_;
    std::vector<Elem> add_, mul_, neg_;
    Elem zero_;
    std::optional<Elem> one_;
};

/// Mixed radix over the factors, first factor most significant.
class ProductRing : public RingImpl {
public:
    explicit ProductRing(std::vector<Ring> factors) : f_(std::move(factors)) {
        std::string k = "(";
        order_ = 1;
        for (std::size_t i = 0; i < f_.size(); ++i) {
            order_ = checked_order(order_, f_[i]->order(), "ring product");
            k += (i ? "x" : "") + f_[i]->key();
        }
        key_ = compact_key(k + ")", order_);
        stride_.assign(f_.size(), 1);
        for (std::size_t i = f_.size(); i-- > 1;) stride_[i - 1] = stride_[i] * f_[i]->order();
        std::vector<Elem> z, o;
        bool unital = true;
        for (const auto& r : f_) {
            z.push_back(r->zero());
            if (r->one()) o.push_back(*r->one());
            else unital = false;
        }
        zero_ = encode(z);
        if (unital) one_ = encode(o);
    }
    Elem digit(Elem x, std::size_t i) const { return static_cast<Elem>((x / stride_[i]) % f_[i]->order()); }
    Elem encode(const std::vector<Elem>& d) const {
        Elem x = 0;
        for (std::size_t i = 0; i < d.size(); ++i) x += d[i] * static_cast<Elem>(stride_[i]);
        return x;
    }
    std::size_t order() const override { return order_; }
    Elem add(Elem a, Elem b) const override {
        Elem x = 0;
        for (std::size_t i = 0; i < f_.size(); ++i)
            x += f_[i]->add(digit(a, i), digit(b, i)) * static_cast<Elem>(stride_[i]);
        return x;
    }
    Elem neg(Elem a) const override {
        Elem x = 0;
        for (std::size_t i = 0; i < f_.size(); ++i) x += f_[i]->neg(digit(a, i)) * static_cast<Elem>(stride_[i]);
        return x;
    }
    Elem zero() const override { return zero_; }
    Elem mul(Elem a, Elem b) const override {
        Elem x = 0;
        for (std::size_t i = 0; i < f_.size(); ++i)
            x += f_[i]->mul(digit(a, i), digit(b, i)) * static_cast<Elem>(stride_[i]);
        return x;
    }
    std::optional<Elem> one() const override { return one_; }
    std::string label(Elem a) const override {
        std::string s = "(";
        for (std::size_t i = 0; i < f_.size(); ++i) s += (i ? "," : "") + f_[i]->label(digit(a, i));
        return s + ")";
    }
    const std::vector<Ring>& factors() const { return f_; }

private:
    std::vector<Ring> f_;
    std::vector<std::size_t> stride_;
    std::size_t order_ = 1;
    Elem zero_ = 0;
    std::optional<Elem> one_;
};

/// R[x]/(x²): a + b·x stored at index a·|R| + b.
class DualRing : public RingImpl {
public:
    explicit DualRing(Ring base) : r_(std::move(base)) {
        checked_order(r_->order(), r_->order(), "dual numbers");
        n_ = static_cast<Elem>(r_->order());
        key_ = compact_key("D(" + r_->key() + ")", static_cast<std::size_t>(n_) * n_);
    }
    std::size_t order() const override { return static_cast<std::size_t>(n_) * n_; }
    Elem add(Elem u, Elem v) const override {
        return r_->add(u / n_, v / n_) * n_ + r_->add(u % n_, v % n_);
    }
    Elem neg(Elem u) const override { return r_->neg(u / n_) * n_ + r_->neg(u % n_); }
    Elem zero() const override { return r_->zero() * n_ + r_->zero(); }
    Elem mul(Elem u, Elem v) const override {
        Elem a = u / n_, b = u % n_, c = v / n_, d = v % n_;
        return r_->mul(a, c) * n_ + r_->add(r_->mul(a, d), r_->mul(b, c));
    }
    std::optional<Elem> one() const override {
        if (auto o = r_->one()) return *o * n_ + r_->zero();
        return std::nullopt;
    }
    std::string label(Elem u) const override { return "(" + r_->label(u / n_) + "|" + r_->label(u % n_) + ")"; }
    const Ring& base() const { return r_; }

private:
    Ring r_;
    Elem n_;
};

/// Subring given by sorted ambient elements.
class SubRing : public RingImpl {
public:
    SubRing(Ring ambient, std::vector<Elem> elems, std::string key) : amb_(std::move(ambient)), el_(std::move(elems)) {
        key_ = compact_key(std::move(key), el_.size());
        zero_ = index_of(amb_->zero());
    }
    std::optional<Elem> find(Elem a) const {
        auto it = std::lower_bound(el_.begin(), el_.end(), a);
        if (it == el_.end() || *it != a) return std::nullopt;
        return static_cast<Elem>(it - el_.begin());
    }
    Elem index_of(Elem a) const {
        if (auto k = find(a)) return *k;
        throw UsageError("subring: element not in subring");
    }
    std::size_t order() const override { return el_.size(); }
    Elem add(Elem a, Elem b) const override { return index_of(amb_->add(el_[a], el_[b])); }
    Elem neg(Elem a) const override { return index_of(amb_->neg(el_[a])); }
    Elem zero() const override { return zero_; }
    Elem mul(Elem a, Elem b) const override { return index_of(amb_->mul(el_[a], el_[b])); }
    /// An element fixing every additive generator from both sides; the ambient unit is tried first.
    std::optional<Elem> one() const override {
        std::call_once(one_once_, [this] {
            const auto& gens = additive_generators();
            auto is_unit = [&](Elem e) {
                for (Elem g : gens)
                    if (mul(e, g) != g || mul(g, e) != g) return false;
                return true;
            };
            if (auto o = amb_->one())
                if (auto k = find(*o); k && is_unit(*k)) {
                    one_ = *k;
                    return;
                }
            for (Elem e = 0; e < el_.size(); ++e)
                if (is_unit(e)) {
                    one_ = e;
                    return;
                }
        });
        return one_;
    }
    std::string label(Elem a) const override { return amb_->label(el_[a]); }
    const Ring& ambient() const { return amb_; }

private:
    Ring amb_;
    std::vector<Elem> el_;
    Elem zero_ = 0;
    mutable std::once_flag one_once_;
    mutable std::optional<Elem> one_;
};

/// Exhaustive ring-law validation on explicit tables.
inline std::optional<std::string> validate_ring_tables(std::size_t n, const std::vector<Elem>& add,
                                                       const std::vector<Elem>& mul, Elem zero,
                                                       std::optional<Elem> one) {
    if (auto err = validate_group_table(n, add, zero)) return "additive group: " + *err;
    if (mul.size() != n * n) return "multiplication table has wrong size";
    for (Elem x : mul)
        if (x >= n) return "multiplication entry outside the element list";
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (add[a * n + b] != add[b * n + a]) return "addition is not commutative";
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c) {
                if (mul[mul[a * n + b] * n + c] != mul[a * n + mul[b * n + c]]) return "multiplication not associative";
                if (mul[a * n + add[b * n + c]] != add[mul[a * n + b] * n + mul[a * n + c]]) return "left distributivity fails";
                if (mul[add[a * n + b] * n + c] != add[mul[a * n + c] * n + mul[b * n + c]]) return "right distributivity fails";
            }
    if (one)
        for (Elem a = 0; a < n; ++a)
            if (mul[*one * n + a] != a || mul[a * n + *one] != a) return "unit law fails";
    return std::nullopt;
}

template <class Add, class Mul>
Ring make_ring(std::string key, std::vector<std::string> labels, Add&& addfn, Mul&& mulfn, Elem zero,
               std::optional<Elem> one) {
    const std::size_t n = labels.size();
    std::vector<Elem> a(n * n), m(n * n);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            a[x * n + y] = addfn(x, y);
            m[x * n + y] = mulfn(x, y);
        }
    if (auto err = validate_ring_tables(n, a, m, zero, one)) throw UsageError("ring " + key + ": " + *err);
    return std::make_shared<const TableRing>(std::move(key), std::move(labels), std::move(a), std::move(m), zero, one);
}

inline std::vector<std::string> numeric_labels(std::size_t n, std::size_t step = 1) {
    std::vector<std::string> l;
    for (std::size_t i = 0; i < n; ++i) l.push_back(std::to_string(i * step));
    return l;
}

/// Z/n; Z/1 is the zero ring, whose unit is 0.
inline Ring zmod_ring(std::size_t n) {
    return make_ring("Z/" + std::to_string(n), numeric_labels(n),
                     [n](Elem a, Elem b) { return static_cast<Elem>((a + b) % n); },
                     [n](Elem a, Elem b) { return static_cast<Elem>((static_cast<std::size_t>(a) * b) % n); }, 0,
                     Elem(n == 1 ? 0 : 1));
}

/// Z/n with zero multiplication.
inline Ring null_ring(std::size_t n) {
    return make_ring("N" + std::to_string(n), numeric_labels(n),
                     [n](Elem a, Elem b) { return static_cast<Elem>((a + b) % n); },
                     [](Elem, Elem) { return Elem(0); }, 0, n == 1 ? std::optional<Elem>(0) : std::nullopt);
}

/// 2Z/8Z: index i stands for 2i.
inline Ring even_mod8_ring() {
    return make_ring("2Z/8Z", numeric_labels(4, 2), [](Elem a, Elem b) { return static_cast<Elem>((a + b) % 4); },
                     [](Elem a, Elem b) { return static_cast<Elem>((2 * a * b) % 4); }, 0, std::nullopt);
}

/// F_4 = F_2[t]/(t²+t+1); index bit0 = constant, bit1 = t.
inline Ring f4_ring() {
    auto mulp = [](Elem a, Elem b) {
        Elem a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
        Elem c0 = (a0 & b0) ^ (a1 & b1);
        Elem c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
        return static_cast<Elem>(c0 | (c1 << 1));
    };
    return make_ring("F4", {"0", "1", "t", "t+1"}, [](Elem a, Elem b) { return a ^ b; }, mulp, 0, Elem(1));
}

/// Upper-triangular 2×2 matrices over F_2; bits (a,b,c) for [[a,b],[0,c]].
inline Ring upper_triangular_ring() {
    auto mulm = [](Elem x, Elem y) {
        Elem a = x >> 2, b = (x >> 1) & 1, c = x & 1, a2 = y >> 2, b2 = (y >> 1) & 1, c2 = y & 1;
        return static_cast<Elem>(((a & a2) << 2) | (((a & b2) ^ (b & c2)) << 1) | (c & c2));
    };
    std::vector<std::string> l;
    for (Elem i = 0; i < 8; ++i) l.push_back(std::to_string(i >> 2) + std::to_string((i >> 1) & 1) + std::to_string(i & 1));
    return make_ring("UT2(F2)", l, [](Elem a, Elem b) { return a ^ b; }, mulm, 0, Elem(5));
}

inline Ring ring_product(std::vector<Ring> f) { return std::make_shared<const ProductRing>(std::move(f)); }
inline Ring dual_ring(Ring r) { return std::make_shared<const DualRing>(std::move(r)); }

enum class RingVariant { nonunital, unital, unit_preserving };

inline const char* variant_name(RingVariant v) {
    switch (v) {
        case RingVariant::nonunital: return "Ring_n";
        case RingVariant::unital: return "Ring_1";
        case RingVariant::unit_preserving: return "Ring_u";
    }
    return "?";
}

struct RingHom {
    Ring dom;
    Ring cod;
    std::shared_ptr<const std::vector<Elem>> map;

    Elem operator()(Elem x) const { return (*map)[x]; }
};

inline RingHom make_ring_hom(Ring dom, Ring cod, std::vector<Elem> t) {
    return RingHom{std::move(dom), std::move(cod), std::make_shared<const std::vector<Elem>>(std::move(t))};
}

/// Minimal n ≥ 1 with n·x = 0 for every x: the lcm of the additive orders of the generators.
inline NatStarInf characteristic(const RingImpl& r) {
    BigInt l = 1;
    for (Elem g : r.additive_generators()) l = boost::multiprecision::lcm(l, BigInt(r.additive_order(g)));
    return NatStarInf(l);
}

/// First element whose additive order equals the characteristic.
inline Elem maximal_order_element(const RingImpl& r) {
    const std::size_t c = static_cast<std::size_t>(characteristic(r).value());
    for (Elem x = 0; x < r.order(); ++x)
        if (r.additive_order(x) == c) return x;
    throw UsageError("maximal_order_element: no element attains the characteristic");
}

class FinRingCat {
public:
    using Object = Ring;
    using Morphism = RingHom;

    explicit FinRingCat(RingVariant v = RingVariant::nonunital) : variant_(v) {}

    RingVariant variant() const { return variant_; }
    std::string name() const { return std::string("FinRing/") + variant_name(variant_); }

    RingHom identity(const Ring& r) const {
        std::vector<Elem> t(r->order());
        std::iota(t.begin(), t.end(), 0);
        return make_ring_hom(r, r, std::move(t));
    }
    RingHom compose(const RingHom& g, const RingHom& f) const {
        if (!same_object(f.cod, g.dom)) throw UsageError("FinRing: composing non-composable maps");
        std::vector<Elem> t(f.map->size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = (*g.map)[(*f.map)[i]];
        return make_ring_hom(f.dom, g.cod, std::move(t));
    }
    bool equal(const RingHom& f, const RingHom& g) const {
        return same_object(f.dom, g.dom) && same_object(f.cod, g.cod) && (f.map == g.map || *f.map == *g.map);
    }
    bool same_object(const Ring& x, const Ring& y) const {
        return x == y || (x->order() == y->order() && x->key() == y->key());
    }
    Ring domain(const RingHom& f) const { return f.dom; }
    Ring codomain(const RingHom& f) const { return f.cod; }
    std::string describe(const Ring& r) const { return r->key() + "[" + std::to_string(r->order()) + "]"; }
    std::string describe(const RingHom& f) const {
        std::string s = f.dom->key() + "->" + f.cod->key();
        if (f.map->size() <= 16) {
            s += ":[";
            for (std::size_t i = 0; i < f.map->size(); ++i) s += (i ? "," : "") + f.cod->label((*f.map)[i]);
            return s + "]";
        }
        std::string raw;
        for (Elem x : *f.map) raw += std::to_string(x) + ",";
        return s + "#" + hex64(fnv1a(raw));
    }

    std::optional<std::string> validate_object(const Ring& r) const {
        if (variant_ != RingVariant::nonunital && !r->one()) return "ring " + r->key() + " has no unit";
        return std::nullopt;
    }

    std::optional<std::string> validate(const RingHom& f) const {
        if (auto e = validate_object(f.dom)) return e;
        if (auto e = validate_object(f.cod)) return e;
        if (f.map->size() != f.dom->order()) return "table size differs from domain order";
        for (Elem x : *f.map)
            if (x >= f.cod->order()) return "image outside codomain";
        if (f(f.dom->zero()) != f.cod->zero()) return "zero not preserved";
        const auto& gens = f.dom->additive_generators();
        for (Elem g : gens)
            for (Elem x = 0; x < f.dom->order(); ++x)
                if (f(f.dom->add(x, g)) != f.cod->add(f(x), f(g))) return "addition not preserved";
        for (Elem a : gens)
            for (Elem b : gens)
                if (f(f.dom->mul(a, b)) != f.cod->mul(f(a), f(b))) return "multiplication not preserved";
        if (variant_ == RingVariant::unit_preserving && f(*f.dom->one()) != *f.cod->one())
            return "unit not preserved";
        return std::nullopt;
    }

    /// {(a,c) : r(a) = f(c)} inside A × C. In the unital variants a non-unital set pullback is
    /// reported as missing.
    std::optional<Square<FinRingCat>> pullback(const RingHom& r, const RingHom& f) const {
        if (!same_object(r.cod, f.cod)) throw UsageError("FinRing::pullback: not a cospan");
        auto amb = ring_product({r.dom, f.dom});
        const std::size_t nc = f.dom->order();
        std::vector<std::vector<Elem>> fibre(f.cod->order());
        for (Elem c = 0; c < nc; ++c) fibre[f(c)].push_back(c);
        std::vector<Elem> el, p0, p1;
        for (Elem a = 0; a < r.dom->order(); ++a)
            for (Elem c : fibre[r(a)]) {
                el.push_back(static_cast<Elem>(a * nc + c));
                p0.push_back(a);
                p1.push_back(c);
            }
        auto P = std::make_shared<const SubRing>(amb, std::move(el),
                                                 "PB(" + hex64(fnv1a(describe(r) + "|" + describe(f))) + ")");
        if (variant_ != RingVariant::nonunital && !P->one()) return std::nullopt;
        Ring Pr = P;
        return Square<FinRingCat>{r, f, Pr, make_ring_hom(Pr, r.dom, std::move(p0)),
                                  make_ring_hom(Pr, f.dom, std::move(p1))};
    }

    RingHom pair(const Square<FinRingCat>& sq, const RingHom& u, const RingHom& v) const {
        const std::size_t nc = sq.pi1.cod->order();
        std::map<std::uint64_t, Elem> idx;
        for (Elem k = 0; k < sq.apex->order(); ++k) idx.emplace(std::uint64_t(sq.pi0(k)) * nc + sq.pi1(k), k);
        std::vector<Elem> t(u.dom->order());
        for (Elem x = 0; x < t.size(); ++x) {
            auto it = idx.find(std::uint64_t(u(x)) * nc + v(x));
            if (it == idx.end()) throw UsageError("FinRing::pair: legs do not form a cone");
            t[x] = it->second;
        }
        return make_ring_hom(u.dom, sq.apex, std::move(t));
    }

    std::optional<RingHom> inverse(const RingHom& f) const {
        if (f.dom->order() != f.cod->order()) return std::nullopt;
        const Elem unset = static_cast<Elem>(-1);
        std::vector<Elem> t(f.cod->order(), unset);
        for (Elem x = 0; x < f.dom->order(); ++x) {
            if (t[f(x)] != unset) return std::nullopt;
            t[f(x)] = x;
        }
        return make_ring_hom(f.cod, f.dom, std::move(t));
    }

    /// Additive-generator images extended additively, then filtered by multiplicativity.
    std::optional<std::vector<RingHom>> homs(const Ring& x, const Ring& y) const {
        if (validate_object(x) || validate_object(y)) return std::vector<RingHom>{};
        const auto& gens = x->additive_generators();
        double count = 1;
        for (std::size_t i = 0; i < gens.size(); ++i) count *= static_cast<double>(y->order());
        if (count > hom_limit) return std::nullopt;
        std::vector<RingHom> out;
        std::vector<Elem> img(gens.size(), 0);
        const Elem unset = static_cast<Elem>(-1);
        while (true) {
            std::vector<Elem> t(x->order(), unset);
            t[x->zero()] = y->zero();
            std::deque<Elem> q{x->zero()};
            bool ok = true;
            while (!q.empty() && ok) {
                Elem a = q.front();
                q.pop_front();
                for (std::size_t k = 0; k < gens.size(); ++k) {
                    Elem b = x->add(a, gens[k]);
                    Elem im = y->add(t[a], img[k]);
                    if (t[b] == unset) {
                        t[b] = im;
                        q.push_back(b);
                    } else if (t[b] != im) {
                        ok = false;
                        break;
                    }
                }
            }
            for (std::size_t i = 0; ok && i < gens.size(); ++i)
                for (std::size_t j = 0; ok && j < gens.size(); ++j)
                    ok = t[x->mul(gens[i], gens[j])] == y->mul(img[i], img[j]);
            if (ok && variant_ == RingVariant::unit_preserving) ok = t[*x->one()] == *y->one();
            if (ok) out.push_back(make_ring_hom(x, y, std::move(t)));
            std::size_t i = 0;
            while (i < img.size() && ++img[i] == y->order()) img[i++] = 0;
            if (i == img.size()) break;
        }
        return out;
    }

    double hom_limit = 300000;

private:
    RingVariant variant_;
};

inline DimensionFunction<Ring> char_dimension(RingVariant v = RingVariant::nonunital) {
    DimensionFunction<Ring> d;
    d.name = std::string("characteristic/") + variant_name(v);
    d.monoid = lcm_monoid();
    d.evaluate = [](const Ring& r) -> DimValue { return characteristic(*r); };
    return d;
}

/// char(A) divides char(B) for a section s: A → B with retraction r.
inline ViolationReport char_section_retraction_check(const FinRingCat& cat, const RingHom& s, const RingHom& r) {
    if (!valid_witness(cat, SectionRetraction<FinRingCat>{s, r}))
        throw UsageError("char_section_retraction_check: r∘s is not the identity");
    if (auto e = cat.validate(s)) throw UsageError("char_section_retraction_check: section invalid: " + *e);
    if (auto e = cat.validate(r)) throw UsageError("char_section_retraction_check: retraction invalid: " + *e);
    ViolationReport rep("characteristic along " + cat.describe(s));
    auto ca = characteristic(*s.dom), cb = characteristic(*s.cod);
    rep.expect("char-divides", divides(ca, cb), Json{{"section", cat.describe(s)}, {"retraction", cat.describe(r)}},
               "char(A) = " + to_string(DimValue(ca)), "char(B) = " + to_string(DimValue(cb)));
    return rep;
}

/// T(R) = R[x]/(x²). p(a+bx) = a, 0(a) = a, + adds the x-coefficients, ℓ(a+bx) = a + b·xy,
/// c swaps x and y in R[x,y]/(x²,y²).
inline TangentStructure<FinRingCat> ring_dual_tangent(const FinRingCat& c) {
    TangentStructure<FinRingCat> ts;
    ts.name = "ring-dual";
    ts.T = [](const Ring& r) { return dual_ring(r); };
    ts.Tm = [](const RingHom& f) {
        const Elem n = static_cast<Elem>(f.dom->order()), m = static_cast<Elem>(f.cod->order());
        std::vector<Elem> t(static_cast<std::size_t>(n) * n);
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) t[a * n + b] = f(a) * m + f(b);
        return make_ring_hom(dual_ring(f.dom), dual_ring(f.cod), std::move(t));
    };
    ts.p = [](const Ring& r) {
        const Elem n = static_cast<Elem>(r->order());
        std::vector<Elem> t(static_cast<std::size_t>(n) * n);
        for (Elem u = 0; u < t.size(); ++u) t[u] = u / n;
        return make_ring_hom(dual_ring(r), r, std::move(t));
    };
    ts.zero = [](const Ring& r) {
        const Elem n = static_cast<Elem>(r->order());
        std::vector<Elem> t(n);
        for (Elem a = 0; a < n; ++a) t[a] = a * n + r->zero();
        return make_ring_hom(r, dual_ring(r), std::move(t));
    };
    ts.plus = [&c, p = ts.p](const Ring& r) {
        const Elem n = static_cast<Elem>(r->order());
        auto P = pullback_power(c, p(r));
        std::vector<Elem> t(P.apex->order());
        for (Elem k = 0; k < t.size(); ++k) {
            Elem x = P.pi0(k), y = P.pi1(k);
            t[k] = (x / n) * n + r->add(x % n, y % n);
        }
        return make_ring_hom(P.apex, P.pi0.cod, std::move(t));
    };
    ts.lift = [](const Ring& r) {
        const Elem n = static_cast<Elem>(r->order()), z = r->zero();
        auto TR = dual_ring(r);
        std::vector<Elem> t(TR->order());
        for (Elem u = 0; u < t.size(); ++u) t[u] = ((u / n) * n + z) * n * n + z * n + u % n;
        return make_ring_hom(TR, dual_ring(TR), std::move(t));
    };
    ts.flip = [](const Ring& r) {
        const Elem n = static_cast<Elem>(r->order());
        auto TTR = dual_ring(dual_ring(r));
        std::vector<Elem> t(TTR->order());
        for (Elem k = 0; k < t.size(); ++k) {
            Elem x = k / (n * n), y = k % (n * n);
            Elem a = x / n, b = x % n, cc = y / n, d = y % n;
            t[k] = (a * n + cc) * n * n + b * n + d;
        }
        return make_ring_hom(TTR, TTR, std::move(t));
    };
    return ts;
}

/// Rings of order ≤ 16.
inline std::vector<Ring> ring_corpus(std::size_t max_order = 16) {
    std::vector<Ring> out;
    auto add = [&](Ring r) {
        if (r->order() <= max_order) out.push_back(std::move(r));
    };
    for (std::size_t n = 1; n <= 16; ++n) add(zmod_ring(n));
    auto Z = [](std::size_t n) { return zmod_ring(n); };
    add(ring_product({Z(2), Z(2)}));
    add(ring_product({Z(2), Z(4)}));
    add(ring_product({Z(2), Z(2), Z(2)}));
    add(ring_product({Z(3), Z(3)}));
    add(ring_product({Z(2), Z(6)}));
    add(ring_product({Z(4), Z(4)}));
    add(ring_product({Z(2), Z(8)}));
    add(dual_ring(Z(2)));
    add(dual_ring(Z(3)));
    add(dual_ring(Z(4)));
    add(f4_ring());
    add(upper_triangular_ring());
    add(null_ring(2));
    add(null_ring(4));
    add(even_mod8_ring());
    add(ring_product({Z(2), null_ring(2)}));
    add(ring_product({Z(3), null_ring(2)}));
    return out;
}

/// Ring from {"add":{cayley}, "mul":[[...]], "one": optional label}.
inline Ring ring_from_tables(const std::vector<std::string>& labels, const std::vector<std::vector<std::string>>& add,
                             const std::string& zero, const std::vector<std::vector<std::string>>& mul,
                             const std::optional<std::string>& one) {
    const std::size_t n = labels.size();
    std::map<std::string, Elem> idx;
    for (Elem i = 0; i < n; ++i) idx[labels[i]] = i;
    if (idx.size() != n) throw UsageError("ring: duplicate element labels");
    auto flatten = [&](const std::vector<std::vector<std::string>>& rows, const char* what) {
        if (rows.size() != n) throw UsageError(std::string("ring: ") + what + " needs one row per element");
        std::vector<Elem> t;
        for (const auto& row : rows) {
            if (row.size() != n) throw UsageError(std::string("ring: ") + what + " row has wrong length");
            for (const auto& s : row) {
                auto it = idx.find(s);
                if (it == idx.end()) throw UsageError(std::string("ring: unknown label '") + s + "' in " + what);
                t.push_back(it->second);
            }
        }
        return t;
    };
    auto a = flatten(add, "add table"), m = flatten(mul, "mul table");
    auto zi = idx.find(zero);
    if (zi == idx.end()) throw UsageError("ring: zero label not an element");
    std::optional<Elem> o;
    if (one) {
        auto oi = idx.find(*one);
        if (oi == idx.end()) throw UsageError("ring: unit label not an element");
        o = oi->second;
    }
    if (auto err = validate_ring_tables(n, a, m, zi->second, o)) throw UsageError("ring: " + *err);
    std::string raw;
    for (Elem x : a) raw += std::to_string(x) + ",";
    raw += "|";
    for (Elem x : m) raw += std::to_string(x) + ",";
    raw += "|" + (one ? *one : std::string("-"));
    return std::make_shared<const TableRing>("ring#" + hex64(fnv1a(raw)), labels, std::move(a), std::move(m),
                                             zi->second, o);
}

}  // namespace tandim
