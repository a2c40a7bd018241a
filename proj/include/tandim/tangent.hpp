#pragma once

/// @file tangent.hpp
/// @brief Tangent-structure data, the axiom checker (additive bundles, lift/flip laws, naturality,
///        universality of the vertical lift), differential bundles and the dimension obstructions.

#include "tandim/category.hpp"

#include <exception>
#include <new>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tandim {

template <class C>
concept TangentCategory = HasPullbacks<C> && HasInverses<C>;

/// Endofunctor plus the five families. plus(X) has domain the solver's pullback of p(X) with itself.
template <TangentCategory C>
struct TangentStructure {
    using Object = typename C::Object;
    using Morphism = typename C::Morphism;

    std::string name;
    std::function<Object(const Object&)> T;
    std::function<Morphism(const Morphism&)> Tm;
    std::function<Morphism(const Object&)> p;
    std::function<Morphism(const Object&)> zero;
    std::function<Morphism(const Object&)> plus;
    std::function<Morphism(const Object&)> lift;
    std::function<Morphism(const Object&)> flip;

    Object T2(const Object& x) const { return T(T(x)); }
    Morphism T2m(const Morphism& f) const { return Tm(Tm(f)); }
};

/// p: X→A with fibrewise addition plus: X₂→X and zero: A→X.
template <TangentCategory C>
struct AdditiveBundle {
    typename C::Object X;
    typename C::Object A;
    typename C::Morphism p;
    typename C::Morphism plus;
    typename C::Morphism zero;
};

namespace detail {

template <class F>
void guarded(ViolationReport& rep, const std::string& check, Json w, F&& body) {
    try {
        bool ok = body();
        rep.expect(check, ok, std::move(w));
    } catch (const UndecidableError& e) {
        w["reason"] = e.what();
        rep.add(check, Status::not_applicable, std::move(w));
    } catch (const std::bad_alloc&) {
        w["reason"] = "out of memory";
        rep.add(check, Status::not_applicable, std::move(w));
    } catch (const std::exception& e) {
        w["error"] = e.what();
        rep.add(check, Status::fail, std::move(w));
    }
}

}  // namespace detail

template <TangentCategory C>
Square<C> pullback_power(const C& c, const typename C::Morphism& p) {
    auto sq = c.pullback(p, p);
    if (!sq) throw UndecidableError("pullback power of " + c.describe(p) + " does not exist");
    return *sq;
}

/// Identity functor with identity transformations; works in any tangent-ready category.
template <TangentCategory C>
TangentStructure<C> trivial_tangent(const C& c) {
    TangentStructure<C> ts;
    ts.name = "trivial";
    ts.T = [](const typename C::Object& x) { return x; };
    ts.Tm = [](const typename C::Morphism& f) { return f; };
    ts.p = [&c](const typename C::Object& x) { return c.identity(x); };
    ts.zero = [&c](const typename C::Object& x) { return c.identity(x); };
    ts.plus = [&c](const typename C::Object& x) { return pullback_power(c, c.identity(x)).pi0; };
    ts.lift = [&c](const typename C::Object& x) { return c.identity(x); };
    ts.flip = [&c](const typename C::Object& x) { return c.identity(x); };
    return ts;
}

/// Comparison T(X ×_A X) → T(X) ×_{T(A)} T(X) and its inverse, when T preserves that pullback.
template <TangentCategory C>
struct PreservedPower {
    Square<C> image;  ///< solver pullback of T(p) with itself
    typename C::Morphism cmp;
    std::optional<typename C::Morphism> cmp_inv;
};

template <TangentCategory C>
PreservedPower<C> preserved_power(const C& c, const std::function<typename C::Morphism(const typename C::Morphism&)>& Tm,
                                  const typename C::Morphism& p, const Square<C>& power) {
    auto Tp = Tm(p);
    auto image = pullback_power(c, Tp);
    auto cmp = c.pair(image, Tm(power.pi0), Tm(power.pi1));
    return PreservedPower<C>{image, cmp, c.inverse(cmp)};
}

/// (p, plus, zero) satisfy the additive bundle equations.
template <TangentCategory C>
ViolationReport check_additive_bundle(const C& c, const AdditiveBundle<C>& b,
                                      const std::string& where = {}) {
    ViolationReport rep("additive bundle " + where);
    Json w{{"object", c.describe(b.X)}, {"base", c.describe(b.A)}};
    std::optional<Square<C>> X2;
    try {
        X2 = pullback_power(c, b.p);
    } catch (const UndecidableError& e) {
        rep.add("pullback-powers", Status::not_applicable, Json{{"reason", e.what()}});
        return rep;
    }
    const auto& pi0 = X2->pi0;
    const auto& pi1 = X2->pi1;
    const auto idX = c.identity(b.X);

    detail::guarded(rep, "plus-over-base-0", w,
                    [&] { return c.equal(c.compose(b.p, b.plus), c.compose(b.p, pi0)); });
    detail::guarded(rep, "plus-over-base-1", w,
                    [&] { return c.equal(c.compose(b.p, b.plus), c.compose(b.p, pi1)); });
    detail::guarded(rep, "zero-section", w,
                    [&] { return c.equal(c.compose(b.p, b.zero), c.identity(b.A)); });
    detail::guarded(rep, "associativity", w, [&] {
        auto sq3 = c.pullback(c.compose(b.p, pi1), b.p);
        if (!sq3) throw UndecidableError("triple pullback power missing");
        const auto& q0 = sq3->pi0;
        const auto& q1 = sq3->pi1;
        auto plus_x_1 = c.pair(*X2, c.compose(b.plus, q0), q1);
        auto inner = c.pair(*X2, c.compose(pi1, q0), q1);
        auto one_x_plus = c.pair(*X2, c.compose(pi0, q0), c.compose(b.plus, inner));
        return c.equal(c.compose(b.plus, plus_x_1), c.compose(b.plus, one_x_plus));
    });
    detail::guarded(rep, "commutativity", w, [&] {
        auto tw = c.pair(*X2, pi1, pi0);
        return c.equal(c.compose(b.plus, tw), b.plus);
    });
    detail::guarded(rep, "unit-left", w, [&] {
        auto u = c.pair(*X2, c.compose(b.zero, b.p), idX);
        return c.equal(c.compose(b.plus, u), idX);
    });
    detail::guarded(rep, "unit-right", w, [&] {
        auto u = c.pair(*X2, idX, c.compose(b.zero, b.p));
        return c.equal(c.compose(b.plus, u), idX);
    });
    return rep;
}

/// (f, g): b1 → b2 is an additive bundle morphism.
template <TangentCategory C>
ViolationReport check_bundle_morphism(const C& c, const AdditiveBundle<C>& b1,
                                      const AdditiveBundle<C>& b2, const typename C::Morphism& f,
                                      const typename C::Morphism& g, const std::string& where = {}) {
    ViolationReport rep("bundle morphism " + where);
    Json w{{"from", c.describe(b1.X)}, {"to", c.describe(b2.X)}};
    detail::guarded(rep, "over-base", w, [&] {
        return c.equal(c.compose(b2.p, f), c.compose(g, b1.p));
    });
    detail::guarded(rep, "preserves-plus", w, [&] {
        auto P1 = pullback_power(c, b1.p);
        auto P2 = pullback_power(c, b2.p);
        auto ff = c.pair(P2, c.compose(f, P1.pi0), c.compose(f, P1.pi1));
        return c.equal(c.compose(f, b1.plus), c.compose(b2.plus, ff));
    });
    detail::guarded(rep, "preserves-zero", w, [&] {
        return c.equal(c.compose(f, b1.zero), c.compose(b2.zero, g));
    });
    return rep;
}

template <TangentCategory C>
class TangentChecker {
public:
    using Object = typename C::Object;
    using Morphism = typename C::Morphism;

    TangentChecker(const C& c, const TangentStructure<C>& ts) : c_(c), ts_(ts) {}

    AdditiveBundle<C> bundle(const Object& M) const {
        return {ts_.T(M), M, ts_.p(M), ts_.plus(M), ts_.zero(M)};
    }

    /// (T²M, TM, T(p), T(+)∘cmp⁻¹, T(0)).
    AdditiveBundle<C> applied_bundle(const Object& M) const {
        auto P = pullback_power(c_, ts_.p(M));
        auto pres = preserved_power<C>(c_, ts_.Tm, ts_.p(M), P);
        if (!pres.cmp_inv) throw UndecidableError("T does not preserve T2 of " + c_.describe(M));
        return {ts_.T2(M), ts_.T(M), ts_.Tm(ts_.p(M)),
                c_.compose(ts_.Tm(ts_.plus(M)), *pres.cmp_inv), ts_.Tm(ts_.zero(M))};
    }

    /// ν = T(+) ∘ ⟨ℓ∘π0, 0_{TM}∘π1⟩ : T₂M → T²M.
    Morphism nu(const Object& M) const {
        auto P = pullback_power(c_, ts_.p(M));
        auto pres = preserved_power<C>(c_, ts_.Tm, ts_.p(M), P);
        if (!pres.cmp_inv) throw UndecidableError("T does not preserve T2 of " + c_.describe(M));
        auto into = c_.pair(pres.image, c_.compose(ts_.lift(M), P.pi0),
                            c_.compose(ts_.zero(ts_.T(M)), P.pi1));
        return c_.compose(ts_.Tm(ts_.plus(M)), c_.compose(*pres.cmp_inv, into));
    }

    /// Square (T₂M; ν, p∘π0) over the cospan T(p): T²M → TM ← M :0.
    Square<C> universality_square(const Object& M) const {
        auto P = pullback_power(c_, ts_.p(M));
        return Square<C>{ts_.Tm(ts_.p(M)), ts_.zero(M), P.apex, nu(M), c_.compose(ts_.p(M), P.pi0)};
    }

    Square<C> apply_T(const Square<C>& sq) const {
        return Square<C>{ts_.Tm(sq.r), ts_.Tm(sq.f), ts_.T(sq.apex), ts_.Tm(sq.pi0), ts_.Tm(sq.pi1)};
    }

    ViolationReport check_universality(const Object& M, std::size_t depth) const {
        ViolationReport rep("universality of the lift at " + c_.describe(M));
        std::optional<Square<C>> sq;
        try {
            sq = universality_square(M);
        } catch (const UndecidableError& e) {
            rep.add("universality[T^0]", Status::not_applicable,
                    Json{{"object", c_.describe(M)}, {"reason", e.what()}});
            return rep;
        } catch (const std::exception& e) {
            rep.add("universality[T^0]", Status::fail,
                    Json{{"object", c_.describe(M)}, {"error", e.what()}});
            return rep;
        }
        for (std::size_t j = 0; j <= depth; ++j) {
            std::string tag = "[T^" + std::to_string(j) + "]";
            Json w{{"object", c_.describe(M)}, {"depth", j}};
            detail::guarded(rep, "universality-commutes" + tag, w, [&] { return commutes(c_, *sq); });
            detail::guarded(rep, "universality-pullback" + tag, w, [&] { return is_pullback(c_, *sq); });
            if (j < depth) sq = apply_T(*sq);
        }
        return rep;
    }

    /// T^j preserves the pullback powers T₂M and T₃M for 1 ≤ j ≤ depth.
    ViolationReport check_power_preservation(const Object& M, std::size_t depth) const {
        ViolationReport rep("pullback powers preserved at " + c_.describe(M));
        Json w{{"object", c_.describe(M)}};
        std::optional<Square<C>> P2, P3;
        try {
            P2 = pullback_power(c_, ts_.p(M));
            auto q = c_.pullback(c_.compose(ts_.p(M), P2->pi1), ts_.p(M));
            if (!q) throw UndecidableError("T3 missing");
            P3 = *q;
        } catch (const UndecidableError& e) {
            rep.add("pullback-powers", Status::not_applicable, Json{{"reason", e.what()}});
            return rep;
        }
        for (std::size_t j = 1; j <= depth; ++j) {
            P2 = apply_T(*P2);
            P3 = apply_T(*P3);
            auto tag = "[T^" + std::to_string(j) + "]";
            detail::guarded(rep, "preserves-T2" + tag, w, [&] { return is_pullback(c_, *P2); });
            detail::guarded(rep, "preserves-T3" + tag, w, [&] { return is_pullback(c_, *P3); });
        }
        return rep;
    }

    ViolationReport check_signatures(const Object& M) const {
        ViolationReport rep("signatures at " + c_.describe(M));
        auto TM = ts_.T(M), T2M = ts_.T2(M);
        Json w{{"object", c_.describe(M)}};
        auto sig = [&](const std::string& name, auto&& make, const Object& dom, const Object& cod) {
            detail::guarded(rep, "signature-" + name, w, [&] {
                Morphism f = make();
                bool ok = c_.same_object(c_.domain(f), dom) && c_.same_object(c_.codomain(f), cod);
                if constexpr (ValidatesMorphisms<C>) {
                    if (auto err = c_.validate(f)) throw UsageError(name + ": " + *err);
                }
                return ok;
            });
        };
        sig("p", [&] { return ts_.p(M); }, TM, M);
        sig("zero", [&] { return ts_.zero(M); }, M, TM);
        sig("plus", [&] { return ts_.plus(M); }, pullback_power(c_, ts_.p(M)).apex, TM);
        sig("lift", [&] { return ts_.lift(M); }, TM, T2M);
        sig("flip", [&] { return ts_.flip(M); }, T2M, T2M);
        return rep;
    }

    ViolationReport check_object(const Object& M) const {
        ViolationReport rep("tangent axioms at " + c_.describe(M));
        rep.merge(check_signatures(M));
        if (!rep.passed()) return rep;
        Json w{{"object", c_.describe(M)}};
        rep.merge(check_additive_bundle(c_, bundle(M), c_.describe(M)), "additive-bundle");

        const auto TM = ts_.T(M);
        const auto l = ts_.lift(M);
        const auto cM = ts_.flip(M);
        try {
            auto Tb = applied_bundle(M);
            rep.merge(check_bundle_morphism(c_, bundle(M), Tb, l, ts_.zero(M)), "lift-bundle-morphism");
            rep.merge(check_bundle_morphism(c_, Tb, bundle(TM), cM, c_.identity(TM)),
                      "flip-bundle-morphism");
        } catch (const UndecidableError& e) {
            rep.add("applied-bundle", Status::not_applicable, Json{{"reason", e.what()}});
        } catch (const std::exception& e) {
            rep.add("applied-bundle", Status::fail, Json{{"object", c_.describe(M)}, {"error", e.what()}});
        }
        detail::guarded(rep, "lift-coassociative", w, [&] {
            return c_.equal(c_.compose(ts_.lift(TM), l), c_.compose(ts_.Tm(l), l));
        });
        detail::guarded(rep, "flip-involution", w, [&] {
            return c_.equal(c_.compose(cM, cM), c_.identity(ts_.T2(M)));
        });
        detail::guarded(rep, "flip-fixes-lift", w, [&] { return c_.equal(c_.compose(cM, l), l); });
        detail::guarded(rep, "braid", w, [&] {
            auto Tc = ts_.Tm(cM);
            auto cT = ts_.flip(TM);
            return c_.equal(c_.compose(Tc, c_.compose(cT, Tc)), c_.compose(cT, c_.compose(Tc, cT)));
        });
        detail::guarded(rep, "lift-flip-compatibility", w, [&] {
            auto lhs = c_.compose(ts_.flip(TM), c_.compose(ts_.Tm(cM), ts_.lift(TM)));
            auto rhs = c_.compose(ts_.Tm(l), cM);
            return c_.equal(lhs, rhs);
        });
        return rep;
    }

    ViolationReport check_morphism(const Morphism& f) const {
        ViolationReport rep("naturality along " + c_.describe(f));
        const auto X = c_.domain(f), Y = c_.codomain(f);
        Json w{{"morphism", c_.describe(f)}};
        const auto Tf = ts_.Tm(f);
        detail::guarded(rep, "natural-p", w, [&] {
            return c_.equal(c_.compose(ts_.p(Y), Tf), c_.compose(f, ts_.p(X)));
        });
        detail::guarded(rep, "natural-zero", w, [&] {
            return c_.equal(c_.compose(ts_.zero(Y), f), c_.compose(Tf, ts_.zero(X)));
        });
        detail::guarded(rep, "natural-plus", w, [&] {
            auto PX = pullback_power(c_, ts_.p(X));
            auto PY = pullback_power(c_, ts_.p(Y));
            auto T2f = c_.pair(PY, c_.compose(Tf, PX.pi0), c_.compose(Tf, PX.pi1));
            return c_.equal(c_.compose(ts_.plus(Y), T2f), c_.compose(Tf, ts_.plus(X)));
        });
        const auto TTf = ts_.Tm(Tf);
        detail::guarded(rep, "natural-lift", w, [&] {
            return c_.equal(c_.compose(ts_.lift(Y), Tf), c_.compose(TTf, ts_.lift(X)));
        });
        detail::guarded(rep, "natural-flip", w, [&] {
            return c_.equal(c_.compose(ts_.flip(Y), TTf), c_.compose(TTf, ts_.flip(X)));
        });
        detail::guarded(rep, "functor-identity", w, [&] {
            return c_.equal(ts_.Tm(c_.identity(X)), c_.identity(ts_.T(X)));
        });
        return rep;
    }

    ViolationReport check_composition(const Morphism& f, const Morphism& g) const {
        ViolationReport rep;
        detail::guarded(rep, "functor-composition", Json{{"f", c_.describe(f)}, {"g", c_.describe(g)}},
                        [&] {
                            return c_.equal(ts_.Tm(c_.compose(g, f)),
                                            c_.compose(ts_.Tm(g), ts_.Tm(f)));
                        });
        return rep;
    }

private:
    const C& c_;
    const TangentStructure<C>& ts_;
};

/// Full axiom suite on a corpus: per-object axioms, power preservation and universality to the
/// requested depth, naturality on each morphism and functoriality on composable pairs.
template <TangentCategory C>
ViolationReport check_tangent_axioms(const C& c, const TangentStructure<C>& ts,
                                     const std::vector<typename C::Object>& objects,
                                     const std::vector<typename C::Morphism>& morphisms,
                                     std::size_t depth = 0) {
    ViolationReport rep("tangent structure '" + ts.name + "' on " + c.name());
    TangentChecker<C> chk(c, ts);
    for (const auto& M : objects) {
        const auto tag = c.describe(M);
        rep.merge(chk.check_object(M), tag);
        rep.merge(chk.check_power_preservation(M, std::max<std::size_t>(depth, 1)), tag);
        rep.merge(chk.check_universality(M, depth), tag);
    }
    for (const auto& f : morphisms) rep.merge(chk.check_morphism(f));
    for (const auto& f : morphisms)
        for (const auto& g : morphisms)
            if (c.same_object(c.codomain(f), c.domain(g))) rep.merge(chk.check_composition(f, g));
    return rep;
}

template <TangentCategory C>
ViolationReport check_universality(const C& c, const TangentStructure<C>& ts,
                                   const typename C::Object& X, std::size_t depth) {
    return TangentChecker<C>(c, ts).check_universality(X, depth);
}

template <TangentCategory C>
typename C::Morphism build_nu(const C& c, const TangentStructure<C>& ts, const typename C::Object& X) {
    return TangentChecker<C>(c, ts).nu(X);
}

/// dim(T²X) + dim X + dim X = dim TX + dim TX + dim TX in the dimension's monoid.
template <TangentCategory C>
CheckEntry check_weak_equation(const C& c, const TangentStructure<C>& ts,
                               const DimensionFunction<typename C::Object>& dim,
                               const typename C::Object& X) {
    const auto& m = dim.monoid;
    auto dX = dim(X), dT = dim(ts.T(X)), dTT = dim(ts.T2(X));
    auto lhs = combine_all(m, {dTT, dX, dX});
    auto rhs = repeat(m, dT, 3);
    CheckEntry e;
    e.check = "weak-equation[" + c.describe(X) + "]";
    e.status = monoid_equal(m, lhs, rhs) ? Status::pass : Status::fail;
    e.lhs = to_string(dTT) + " " + m.symbol + " " + to_string(dX) + " " + m.symbol + " " +
            to_string(dX) + " = " + to_string(lhs);
    e.rhs = to_string(dT) + " " + m.symbol + " " + to_string(dT) + " " + m.symbol + " " +
            to_string(dT) + " = " + to_string(rhs);
    e.witnesses = {{"structure", ts.name}, {"dimension", dim.name}, {"object", c.describe(X)}};
    return e;
}

/// A rig-valued dimension with a scaling constant, dim(TX) = a·dim(X).
template <class Obj>
struct StrongDimension {
    DimensionFunction<Obj> dim;
    BigInt a;
};

enum class Branch { a_is_1, a_is_2, dim_zero, violation };

inline const char* branch_name(Branch b) {
    switch (b) {
        case Branch::a_is_1: return "a=1";
        case Branch::a_is_2: return "a=2";
        case Branch::dim_zero: return "dim-zero";
        case Branch::violation: return "violation";
    }
    return "?";
}

struct DichotomyResult {
    Branch branch;
    BigInt value;  ///< (a−1)(a−2)·dim(X)
};

template <class Obj>
DichotomyResult check_strong_dichotomy(const StrongDimension<Obj>& sd, const Obj& X) {
    const auto& m = sd.dim.monoid;
    if (!m.is_rig || m.carrier != Carrier::integer)
        throw UsageError("strong dichotomy needs an integer rig, got '" + m.tag + "'");
    BigInt d = std::get<BigInt>(sd.dim(X));
    BigInt v = (sd.a - 1) * (sd.a - 2) * d;
    if (v != 0) return {Branch::violation, v};
    if (sd.a == 1) return {Branch::a_is_1, v};
    if (sd.a == 2) return {Branch::a_is_2, v};
    return {Branch::dim_zero, v};
}

/// dim(T X) = a · dim(X), evaluated through the structure's functor.
template <TangentCategory C>
CheckEntry check_strong_scaling(const C& c, const std::function<typename C::Object(const typename C::Object&)>& T,
                                const StrongDimension<typename C::Object>& sd,
                                const typename C::Object& X) {
    BigInt dT = std::get<BigInt>(sd.dim(T(X))), d = std::get<BigInt>(sd.dim(X));
    CheckEntry e;
    e.check = "strong-scaling[" + c.describe(X) + "]";
    e.status = dT == sd.a * d ? Status::pass : Status::fail;
    e.lhs = dT.str();
    e.rhs = sd.a.str() + "·" + d.str() + " = " + BigInt(sd.a * d).str();
    return e;
}

template <TangentCategory C>
struct DifferentialBundle {
    typename C::Object E;
    typename C::Object M;
    typename C::Morphism q;
    typename C::Morphism zeta;
    typename C::Morphism sigma;
    typename C::Morphism lambda;
};

template <TangentCategory C>
ViolationReport check_differential_bundle(const C& c, const TangentStructure<C>& ts,
                                          const DifferentialBundle<C>& db, std::size_t depth = 1) {
    ViolationReport rep("differential bundle over " + c.describe(db.M));
    Json w{{"total", c.describe(db.E)}, {"base", c.describe(db.M)}};
    std::optional<Square<C>> E2;
    try {
        E2 = pullback_power(c, db.q);
    } catch (const UndecidableError& e) {
        rep.add("pullback-powers", Status::not_applicable, Json{{"reason", e.what()}});
        return rep;
    }
    {
        Square<C> sq = *E2;
        for (std::size_t j = 1; j <= depth; ++j) {
            sq = Square<C>{ts.Tm(sq.r), ts.Tm(sq.f), ts.T(sq.apex), ts.Tm(sq.pi0), ts.Tm(sq.pi1)};
            detail::guarded(rep, "powers-preserved[T^" + std::to_string(j) + "]", w,
                            [&] { return is_pullback(c, sq); });
        }
    }
    AdditiveBundle<C> base{db.E, db.M, db.q, db.sigma, db.zeta};
    rep.merge(check_additive_bundle(c, base, c.describe(db.E)), "additive-bundle");

    try {
        auto pres = preserved_power<C>(c, ts.Tm, db.q, *E2);
        if (!pres.cmp_inv) throw UndecidableError("T does not preserve E2");
        AdditiveBundle<C> applied{ts.T(db.E), ts.T(db.M), ts.Tm(db.q),
                                  c.compose(ts.Tm(db.sigma), *pres.cmp_inv), ts.Tm(db.zeta)};
        rep.merge(check_bundle_morphism(c, base, applied, db.lambda, ts.zero(db.M)),
                  "lift-over-zero");
        AdditiveBundle<C> tangentE{ts.T(db.E), db.E, ts.p(db.E), ts.plus(db.E), ts.zero(db.E)};
        rep.merge(check_bundle_morphism(c, base, tangentE, db.lambda, db.zeta), "lift-over-zeta");

        auto into = c.pair(pres.image, c.compose(db.lambda, E2->pi0),
                           c.compose(ts.zero(db.E), E2->pi1));
        auto mu = c.compose(ts.Tm(db.sigma), c.compose(*pres.cmp_inv, into));
        Square<C> sq{ts.Tm(db.q), ts.zero(db.M), E2->apex, mu, c.compose(db.q, E2->pi0)};
        for (std::size_t j = 0; j <= depth; ++j) {
            auto tag = "[T^" + std::to_string(j) + "]";
            detail::guarded(rep, "lift-square-commutes" + tag, w, [&] { return commutes(c, sq); });
            detail::guarded(rep, "lift-square-pullback" + tag, w, [&] { return is_pullback(c, sq); });
            if (j < depth)
                sq = Square<C>{ts.Tm(sq.r), ts.Tm(sq.f), ts.T(sq.apex), ts.Tm(sq.pi0), ts.Tm(sq.pi1)};
        }
    } catch (const UndecidableError& e) {
        rep.add("lift-clauses", Status::not_applicable, Json{{"reason", e.what()}});
    } catch (const std::exception& e) {
        rep.add("lift-clauses", Status::fail, Json{{"error", e.what()}});
    }
    detail::guarded(rep, "lift-equality", w, [&] {
        return c.equal(c.compose(ts.lift(db.E), db.lambda), c.compose(ts.Tm(db.lambda), db.lambda));
    });
    return rep;
}

/// dim(TE) + 2 dim(M) = dim(TM) + 2 dim(E); with a rig constant a also (a−2)dim(E) = (a−2)dim(M).
template <TangentCategory C>
ViolationReport check_diffbun_equations(const C& c, const TangentStructure<C>& ts,
                                        const DimensionFunction<typename C::Object>& dim,
                                        const DifferentialBundle<C>& db,
                                        std::optional<BigInt> a = std::nullopt) {
    ViolationReport rep("differential bundle equations over " + c.describe(db.M));
    const auto& m = dim.monoid;
    auto dE = dim(db.E), dM = dim(db.M), dTE = dim(ts.T(db.E)), dTM = dim(ts.T(db.M));
    auto lhs = combine_all(m, {dTE, dM, dM});
    auto rhs = combine_all(m, {dTM, dE, dE});
    rep.expect("weak", monoid_equal(m, lhs, rhs), Json{{"total", c.describe(db.E)}},
               to_string(dTE) + " " + m.symbol + " " + to_string(dM) + " " + m.symbol + " " +
                   to_string(dM) + " = " + to_string(lhs),
               to_string(dTM) + " " + m.symbol + " " + to_string(dE) + " " + m.symbol + " " +
                   to_string(dE) + " = " + to_string(rhs));
    if (a) {
        if (m.carrier != Carrier::integer) throw UsageError("strong equation needs an integer rig");
        BigInt l = (*a - 2) * std::get<BigInt>(dE), r = (*a - 2) * std::get<BigInt>(dM);
        rep.expect("strong", l == r, Json{{"a", a->str()}}, l.str(), r.str());
    }
    return rep;
}

/// Weak-equation necessary condition for an endofunctor; a failure rules out every tangent
/// structure with this functor (for this dimension). A pass proves nothing.
template <Category C>
ViolationReport reject_endofunctor_by_dimension(const C& c, const FunctorData<C, C>& T,
                                                const DimensionFunction<typename C::Object>& dim,
                                                const std::vector<typename C::Object>& objects) {
    ViolationReport rep("weak-equation obstruction for " + T.name);
    const auto& m = dim.monoid;
    for (const auto& X : objects) {
        auto TX = T.on_object(X);
        auto dX = dim(X), dT = dim(TX), dTT = dim(T.on_object(TX));
        auto lhs = combine_all(m, {dTT, dX, dX});
        auto rhs = repeat(m, dT, 3);
        bool ok = monoid_equal(m, lhs, rhs);
        CheckEntry e;
        e.check = "weak-equation[" + c.describe(X) + "]";
        e.status = ok ? Status::pass : Status::fail;
        e.lhs = to_string(dTT) + " " + m.symbol + " 2×" + to_string(dX) + " = " + to_string(lhs);
        e.rhs = "3×" + to_string(dT) + " = " + to_string(rhs);
        e.witnesses = {{"object", c.describe(X)},
                       {"verdict", ok ? "necessary condition passed, not sufficient"
                                      : "no tangent structure has this endofunctor"}};
        rep.add(std::move(e));
    }
    return rep;
}

/// Replaces one family of a structure; used to build mutants.
template <TangentCategory C>
TangentStructure<C> with_family(TangentStructure<C> ts, const std::string& family,
                                std::function<typename C::Morphism(const typename C::Object&)> fn,
                                const std::string& label) {
    ts.name += "~" + label;
    if (family == "p") ts.p = std::move(fn);
    else if (family == "zero") ts.zero = std::move(fn);
    else if (family == "plus") ts.plus = std::move(fn);
    else if (family == "lift") ts.lift = std::move(fn);
    else if (family == "flip") ts.flip = std::move(fn);
    else throw UsageError("unknown structure family '" + family + "'");
    return ts;
}

}  // namespace tandim
