#pragma once

/// @file category.hpp
/// @brief Computable-category interface, pullback verification, section/retraction witnesses,
///        the dimension-equation verifier and transport of dimensions along functors.

#include "tandim/monoid.hpp"
#include "tandim/report.hpp"

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace tandim {

template <class C>
concept Category = requires(const C& c, const typename C::Object& x,
                            const typename C::Morphism& f) {
    { c.name() } -> std::convertible_to<std::string>;
    { c.identity(x) } -> std::same_as<typename C::Morphism>;
    { c.compose(f, f) } -> std::same_as<typename C::Morphism>;
    { c.equal(f, f) } -> std::convertible_to<bool>;
    { c.same_object(x, x) } -> std::convertible_to<bool>;
    { c.domain(f) } -> std::convertible_to<typename C::Object>;
    { c.codomain(f) } -> std::convertible_to<typename C::Object>;
    { c.describe(x) } -> std::convertible_to<std::string>;
    { c.describe(f) } -> std::convertible_to<std::string>;
};

/// Cospan A -r-> B <-f- C completed by an apex P with legs pi0: P→A, pi1: P→C.
template <class C>
struct Square {
    typename C::Morphism r;
    typename C::Morphism f;
    typename C::Object apex;
    typename C::Morphism pi0;
    typename C::Morphism pi1;
};

/// Span B <-s- A -g-> C completed by an apex P with legs in0: B→P, in1: C→P.
template <class C>
struct Cocone {
    typename C::Morphism s;
    typename C::Morphism g;
    typename C::Object apex;
    typename C::Morphism in0;
    typename C::Morphism in1;
};

template <class C>
concept HasPullbacks = Category<C> && requires(const C& c, const typename C::Morphism& f,
                                               const Square<C>& sq) {
    { c.pullback(f, f) } -> std::same_as<std::optional<Square<C>>>;
    { c.pair(sq, f, f) } -> std::same_as<typename C::Morphism>;
};

template <class C>
concept HasPushouts = Category<C> && requires(const C& c, const typename C::Morphism& f,
                                              const Cocone<C>& co) {
    { c.pushout(f, f) } -> std::same_as<std::optional<Cocone<C>>>;
    { c.copair(co, f, f) } -> std::same_as<typename C::Morphism>;
};

template <class C>
concept HasInverses = Category<C> && requires(const C& c, const typename C::Morphism& f) {
    { c.inverse(f) } -> std::same_as<std::optional<typename C::Morphism>>;
};

template <class C>
concept HasHoms = Category<C> && requires(const C& c, const typename C::Object& x) {
    { c.homs(x, x) } -> std::same_as<std::optional<std::vector<typename C::Morphism>>>;
};

template <class C>
concept ValidatesMorphisms = Category<C> && requires(const C& c, const typename C::Morphism& f) {
    { c.validate(f) } -> std::same_as<std::optional<std::string>>;
};

template <class C>
concept HasTestObjects = Category<C> && requires(const C& c) {
    { c.test_objects() } -> std::same_as<std::vector<typename C::Object>>;
};

template <Category C>
bool is_identity(const C& c, const typename C::Morphism& f) {
    return c.same_object(c.domain(f), c.codomain(f)) && c.equal(f, c.identity(c.domain(f)));
}

template <Category C>
bool commutes(const C& c, const Square<C>& sq) {
    return c.equal(c.compose(sq.r, sq.pi0), c.compose(sq.f, sq.pi1));
}

/// Brute-force universal property: every competitor cone from each test object factors uniquely.
template <HasHoms C>
bool is_pullback_by_enumeration(const C& c, const Square<C>& sq,
                                const std::vector<typename C::Object>& test_objects) {
    if (!commutes(c, sq)) return false;
    const auto A = c.domain(sq.r);
    const auto Cc = c.domain(sq.f);
    for (const auto& X : test_objects) {
        auto hu = c.homs(X, A), hv = c.homs(X, Cc), hh = c.homs(X, sq.apex);
        if (!hu || !hv || !hh) throw UndecidableError("hom-set not enumerable in " + c.name());
        for (const auto& u : *hu)
            for (const auto& v : *hv) {
                if (!c.equal(c.compose(sq.r, u), c.compose(sq.f, v))) continue;
                std::size_t n = 0;
                for (const auto& h : *hh)
                    if (c.equal(c.compose(sq.pi0, h), u) && c.equal(c.compose(sq.pi1, h), v)) ++n;
                if (n != 1) return false;
            }
    }
    return true;
}

/// Pullback test: the comparison map from the square's apex into the solver's apex is an iso.
/// Falls back to enumeration over the category's test objects when no solver answer exists.
template <Category C>
bool is_pullback(const C& c, const Square<C>& sq) {
    if (!commutes(c, sq)) return false;
    if constexpr (HasPullbacks<C> && HasInverses<C>) {
        if (auto canon = c.pullback(sq.r, sq.f)) {
            auto k = c.pair(*canon, sq.pi0, sq.pi1);
            auto inv = c.inverse(k);
            if (!inv) return false;
            return c.equal(c.compose(sq.pi0, *inv), canon->pi0) &&
                   c.equal(c.compose(sq.pi1, *inv), canon->pi1);
        }
    }
    if constexpr (HasHoms<C> && HasTestObjects<C>) {
        return is_pullback_by_enumeration(c, sq, c.test_objects());
    }
    throw UndecidableError("is_pullback: no solver answer and no enumeration in " + c.name());
}

/// s: B→A and r: A→B with r∘s = id_B.
template <Category C>
struct SectionRetraction {
    typename C::Morphism s;
    typename C::Morphism r;
};

template <Category C>
bool valid_witness(const C& c, const SectionRetraction<C>& w) {
    if (!c.same_object(c.codomain(w.s), c.domain(w.r))) return false;
    if (!c.same_object(c.domain(w.s), c.codomain(w.r))) return false;
    return is_identity(c, c.compose(w.r, w.s));
}

template <Category C>
struct Classification {
    std::optional<SectionRetraction<C>> as_section;     ///< f = s, with a left inverse r
    std::optional<SectionRetraction<C>> as_retraction;  ///< f = r, with a right inverse s
    bool decided = false;                               ///< false when homs were not enumerable

    bool is_section() const { return as_section.has_value(); }
    bool is_retraction() const { return as_retraction.has_value(); }
    bool classified() const { return is_section() || is_retraction(); }
};

template <Category C>
Classification<C> classify_morphism(const C& c, const typename C::Morphism& f) {
    Classification<C> out;
    if (is_identity(c, f)) {
        out.as_section = SectionRetraction<C>{f, f};
        out.as_retraction = SectionRetraction<C>{f, f};
        out.decided = true;
        return out;
    }
    if constexpr (HasHoms<C>) {
        auto back = c.homs(c.codomain(f), c.domain(f));
        if (!back) return out;
        out.decided = true;
        for (const auto& g : *back) {
            if (!out.as_section && is_identity(c, c.compose(g, f)))
                out.as_section = SectionRetraction<C>{f, g};
            if (!out.as_retraction && is_identity(c, c.compose(f, g)))
                out.as_retraction = SectionRetraction<C>{g, f};
            if (out.as_section && out.as_retraction) break;
        }
    }
    return out;
}

template <class Obj>
struct DimensionFunction {
    std::string name;
    MonoidSpec monoid;
    std::function<DimValue(const Obj&)> evaluate;
    std::vector<std::string> warnings;

    DimValue operator()(const Obj& x) const { return evaluate(x); }
};

/// A square together with the witnesses that make it admissible.
template <Category C>
struct AdmissibleSquare {
    std::string label;
    Square<C> square;
    std::optional<SectionRetraction<C>> r_witness;
    Classification<C> f_class;
};

/// dim(P) + dim(B) = dim(A) + dim(C), asserted only when r is a witnessed retraction and
/// f a witnessed section or retraction.
template <Category C>
CheckEntry verify_dimension_on_square(const C& c, const DimensionFunction<typename C::Object>& dim,
                                      const AdmissibleSquare<C>& adm) {
    const auto& sq = adm.square;
    CheckEntry e;
    e.check = "dimension-equation";
    if (!adm.label.empty()) e.check += "[" + adm.label + "]";
    e.witnesses["category"] = c.name();
    e.witnesses["dimension"] = dim.name;

    bool r_ok = adm.r_witness && c.equal(adm.r_witness->r, sq.r) && valid_witness(c, *adm.r_witness);
    bool f_ok = false;
    std::string f_role;
    if (adm.f_class.as_section && c.equal(adm.f_class.as_section->s, sq.f) &&
        valid_witness(c, *adm.f_class.as_section)) {
        f_ok = true;
        f_role = "section";
    } else if (adm.f_class.as_retraction && c.equal(adm.f_class.as_retraction->r, sq.f) &&
               valid_witness(c, *adm.f_class.as_retraction)) {
        f_ok = true;
        f_role = "retraction";
    }
    if (!r_ok || !f_ok) {
        e.status = Status::not_applicable;
        e.witnesses["reason"] = !r_ok ? "r has no verified section" : "f is not classified";
        return e;
    }
    e.witnesses["f-role"] = f_role;
    e.witnesses["r"] = c.describe(sq.r);
    e.witnesses["f"] = c.describe(sq.f);
    e.witnesses["apex"] = c.describe(sq.apex);

    const auto& m = dim.monoid;
    DimValue dP = dim(sq.apex), dB = dim(c.codomain(sq.r)), dA = dim(c.domain(sq.r)),
             dC = dim(c.domain(sq.f));
    DimValue lhs = combine(m, dP, dB), rhs = combine(m, dA, dC);
    e.lhs = to_string(dP) + " " + m.symbol + " " + to_string(dB) + " = " + to_string(lhs);
    e.rhs = to_string(dA) + " " + m.symbol + " " + to_string(dC) + " = " + to_string(rhs);
    e.status = monoid_equal(m, lhs, rhs) ? Status::pass : Status::fail;
    return e;
}

/// Runs is_pullback and the dimension equation on every square.
template <Category C>
ViolationReport verify_dimension_harness(const C& c,
                                         const DimensionFunction<typename C::Object>& dim,
                                         const std::vector<AdmissibleSquare<C>>& squares) {
    ViolationReport rep("dimension harness: " + c.name() + " / " + dim.name);
    for (const auto& adm : squares) {
        bool pb = is_pullback(c, adm.square);
        if (!pb) {
            rep.add("is-pullback[" + adm.label + "]", Status::fail,
                    Json{{"apex", c.describe(adm.square.apex)}});
            continue;
        }
        rep.add(verify_dimension_on_square(c, dim, adm));
    }
    return rep;
}

template <Category Src, Category Tgt>
struct FunctorData {
    std::string name;
    std::function<typename Tgt::Object(const typename Src::Object&)> on_object;
    std::function<typename Tgt::Morphism(const typename Src::Morphism&)> on_morphism;
};

/// G∘F.
template <Category A, Category B, Category Cc>
FunctorData<A, Cc> compose_functors(const FunctorData<A, B>& F, const FunctorData<B, Cc>& G) {
    return FunctorData<A, Cc>{
        G.name + "∘" + F.name,
        [F, G](const typename A::Object& x) { return G.on_object(F.on_object(x)); },
        [F, G](const typename A::Morphism& f) { return G.on_morphism(F.on_morphism(f)); }};
}

template <Category Src, Category Tgt>
ViolationReport check_functor(const Src& src, const Tgt& tgt, const FunctorData<Src, Tgt>& F,
                              const std::vector<typename Src::Object>& objects,
                              const std::vector<typename Src::Morphism>& morphisms) {
    ViolationReport rep("functor laws: " + F.name);
    for (const auto& x : objects) {
        bool ok = tgt.equal(F.on_morphism(src.identity(x)), tgt.identity(F.on_object(x)));
        rep.expect("preserves-identity", ok, Json{{"object", src.describe(x)}});
    }
    for (const auto& f : morphisms)
        for (const auto& g : morphisms) {
            if (!src.same_object(src.codomain(f), src.domain(g))) continue;
            bool ok = tgt.equal(F.on_morphism(src.compose(g, f)),
                                tgt.compose(F.on_morphism(g), F.on_morphism(f)));
            rep.expect("preserves-composition", ok,
                       Json{{"f", src.describe(f)}, {"g", src.describe(g)}});
        }
    return rep;
}

/// Image of each pullback square is again a pullback.
template <Category Src, Category Tgt>
ViolationReport check_preserves_pullbacks(const Src& src, const Tgt& tgt,
                                          const FunctorData<Src, Tgt>& F,
                                          const std::vector<Square<Src>>& squares) {
    ViolationReport rep("pullback preservation: " + F.name);
    for (const auto& sq : squares) {
        Square<Tgt> img{F.on_morphism(sq.r), F.on_morphism(sq.f), F.on_object(sq.apex),
                        F.on_morphism(sq.pi0), F.on_morphism(sq.pi1)};
        rep.expect("image-is-pullback", is_pullback(tgt, img),
                   Json{{"apex", src.describe(sq.apex)}});
    }
    return rep;
}

/// X ↦ dim(F(X)); a failed preservation audit is attached as a warning.
template <Category Src, Category Tgt>
DimensionFunction<typename Src::Object> transport_dimension(
    const FunctorData<Src, Tgt>& F, const DimensionFunction<typename Tgt::Object>& dim,
    const ViolationReport* preservation = nullptr) {
    DimensionFunction<typename Src::Object> out;
    out.name = dim.name + "∘" + F.name;
    out.monoid = dim.monoid;
    out.evaluate = [F, dim](const typename Src::Object& x) { return dim(F.on_object(x)); };
    out.warnings = dim.warnings;
    if (preservation && !preservation->passed())
        out.warnings.push_back("sampled limit-preservation check failed for " + F.name);
    return out;
}

/// Section/retraction pairs and classified morphisms over a finite object corpus.
template <HasHoms C>
class HomIndex {
public:
    using Object = typename C::Object;
    using Morphism = typename C::Morphism;

    struct Classified {
        std::size_t dom, cod;
        Morphism f;
        Classification<C> cls;
    };

    HomIndex(const C& c, std::vector<Object> objects) : c_(c), objects_(std::move(objects)) {
        const std::size_t n = objects_.size();
        homs_.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto hs = c_.homs(objects_[i], objects_[j]);
                if (!hs) throw UndecidableError("HomIndex: homs not enumerable in " + c_.name());
                homs_[i * n + j] = std::move(*hs);
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (const auto& f : homs_[i * n + j]) {
                    Classified k{i, j, f, {}};
                    k.cls.decided = true;
                    if (is_identity(c_, f)) {
                        k.cls.as_section = SectionRetraction<C>{f, f};
                        k.cls.as_retraction = SectionRetraction<C>{f, f};
                    } else {
                        for (const auto& g : homs_[j * n + i]) {
                            if (!k.cls.as_section && is_identity(c_, c_.compose(g, f)))
                                k.cls.as_section = SectionRetraction<C>{f, g};
                            if (!k.cls.as_retraction && is_identity(c_, c_.compose(f, g)))
                                k.cls.as_retraction = SectionRetraction<C>{g, f};
                            if (k.cls.as_section && k.cls.as_retraction) break;
                        }
                    }
                    if (k.cls.classified()) classified_.push_back(k);
                    if (k.cls.as_retraction) retractions_.push_back(classified_.size() - 1);
                }
    }

    const std::vector<Object>& objects() const { return objects_; }
    const std::vector<Morphism>& homs(std::size_t i, std::size_t j) const {
        return homs_[i * objects_.size() + j];
    }
    const std::vector<Classified>& classified() const { return classified_; }
    const std::vector<std::size_t>& retractions() const { return retractions_; }

    std::vector<std::size_t> classified_into(std::size_t cod) const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < classified_.size(); ++k)
            if (classified_[k].cod == cod) out.push_back(k);
        return out;
    }

private:
    const C& c_;
    std::vector<Object> objects_;
    std::vector<std::vector<Morphism>> homs_;
    std::vector<Classified> classified_;
    std::vector<std::size_t> retractions_;
};

/// Seeded cospans A -r-> B <-f- C with r a witnessed retraction and f classified.
/// One attempt per unit of budget; attempts whose pullback does not exist are dropped.
template <class C>
    requires HasHoms<C> && HasPullbacks<C>
std::vector<AdmissibleSquare<C>> sample_admissible_squares(const C& c, const HomIndex<C>& index,
                                                           std::size_t budget,
                                                           std::uint64_t seed) {
    std::vector<AdmissibleSquare<C>> out;
    if (budget == 0 || index.retractions().empty()) return out;
    std::mt19937_64 rng(seed);
    std::map<std::size_t, std::vector<std::size_t>> into;
    for (std::size_t t = 0; t < budget; ++t) {
        const auto& rk = index.classified()[index.retractions()[rng() % index.retractions().size()]];
        auto it = into.find(rk.cod);
        if (it == into.end()) it = into.emplace(rk.cod, index.classified_into(rk.cod)).first;
        const auto& cands = it->second;
        const auto& fk = index.classified()[cands[rng() % cands.size()]];
        auto pb = c.pullback(rk.f, fk.f);
        if (!pb) continue;
        AdmissibleSquare<C> adm{"s" + std::to_string(t), *pb, rk.cls.as_retraction, fk.cls};
        out.push_back(std::move(adm));
    }
    return out;
}

/// The opposite category: pullbacks are the base category's pushouts.
template <Category C>
class Opposite {
public:
    using Object = typename C::Object;
    struct Morphism {
        typename C::Morphism m;  ///< the underlying arrow, pointing the other way
    };

    Opposite() = default;
    explicit Opposite(C base) : base_(std::move(base)) {}

    const C& base() const { return base_; }
    std::string name() const { return base_.name() + "^op"; }

    Morphism identity(const Object& x) const { return {base_.identity(x)}; }
    Morphism compose(const Morphism& g, const Morphism& f) const {
        return {base_.compose(f.m, g.m)};
    }
    bool equal(const Morphism& f, const Morphism& g) const { return base_.equal(f.m, g.m); }
    bool same_object(const Object& x, const Object& y) const { return base_.same_object(x, y); }
    Object domain(const Morphism& f) const { return base_.codomain(f.m); }
    Object codomain(const Morphism& f) const { return base_.domain(f.m); }
    std::string describe(const Object& x) const { return base_.describe(x); }
    std::string describe(const Morphism& f) const { return "op(" + base_.describe(f.m) + ")"; }

    std::optional<Square<Opposite>> pullback(const Morphism& r, const Morphism& f) const
        requires HasPushouts<C>
    {
        auto co = base_.pushout(r.m, f.m);
        if (!co) return std::nullopt;
        return Square<Opposite>{r, f, co->apex, {co->in0}, {co->in1}};
    }

    Morphism pair(const Square<Opposite>& sq, const Morphism& u, const Morphism& v) const
        requires HasPushouts<C>
    {
        Cocone<C> co{sq.r.m, sq.f.m, sq.apex, sq.pi0.m, sq.pi1.m};
        return {base_.copair(co, u.m, v.m)};
    }

    std::optional<Morphism> inverse(const Morphism& f) const
        requires HasInverses<C>
    {
        auto inv = base_.inverse(f.m);
        if (!inv) return std::nullopt;
        return Morphism{*inv};
    }

    std::optional<std::vector<Morphism>> homs(const Object& x, const Object& y) const
        requires HasHoms<C>
    {
        auto hs = base_.homs(y, x);
        if (!hs) return std::nullopt;
        std::vector<Morphism> out;
        out.reserve(hs->size());
        for (auto& h : *hs) out.push_back({std::move(h)});
        return out;
    }

    std::optional<std::string> validate(const Morphism& f) const
        requires ValidatesMorphisms<C>
    {
        return base_.validate(f.m);
    }

    std::vector<Object> test_objects() const
        requires HasTestObjects<C>
    {
        return base_.test_objects();
    }

private:
    C base_;
};

}  // namespace tandim
