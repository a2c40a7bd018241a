#pragma once

/// @file modrank.hpp
/// @brief Finitely presented modules over Z (and over F_p as Z-modules killed by p),
///        homomorphisms as integer matrices, kernel-based pullbacks and the rank dimension.

#include "tandim/category.hpp"
#include "tandim/intmat.hpp"

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace tandim {

/// Z^gens modulo the lattice spanned by the columns of rels.
class FGModule {
public:
    FGModule() : FGModule(0, IntMatrix(0, 0)) {}
    FGModule(std::size_t gens, IntMatrix rels) {
        if (rels.rows() != gens) throw UsageError("FGModule: relation matrix needs one row per generator");
        auto impl = std::make_shared<Impl>();
        impl->gens = gens;
        impl->rels = std::move(rels);
        impl->snf = smith_normal_form(impl->rels);
        impl_ = std::move(impl);
    }

    static FGModule free(std::size_t n) { return FGModule(n, IntMatrix(n, 0)); }

    /// Z^free ⊕ Z/d_1 ⊕ … ⊕ Z/d_k.
    static FGModule standard(std::size_t free_rank, const std::vector<long long>& torsion) {
        const std::size_t n = free_rank + torsion.size();
        IntMatrix R(n, torsion.size());
        for (std::size_t i = 0; i < torsion.size(); ++i) R(free_rank + i, i) = torsion[i];
        return FGModule(n, R);
    }

    static FGModule vector_space(long long p, std::size_t k) {
        return standard(0, std::vector<long long>(k, p));
    }

    std::size_t gens() const { return impl_->gens; }
    const IntMatrix& rels() const { return impl_->rels; }
    const SNFResult& snf() const { return impl_->snf; }

    /// v lies in the relation lattice.
    bool is_relation(const std::vector<BigInt>& v) const {
        if (impl_->rels.cols() == 0) {
            for (const auto& x : v)
                if (x != 0) return false;
            return true;
        }
        return solve_integer(impl_->snf, v).has_value();
    }

    std::size_t rank() const { return gens() - impl_->snf.rank; }
    std::size_t rank_mod(const BigInt& p) const { return gens() - rank_mod_p(impl_->snf, p); }

    /// Structure from the invariant factors, e.g. "Z^2+Z/5".
    std::string structure() const {
        std::vector<std::string> parts;
        std::size_t fr = rank();
        if (fr > 0) parts.push_back(fr == 1 ? "Z" : "Z^" + std::to_string(fr));
        for (std::size_t i = 0; i < impl_->snf.rank; ++i) {
            const auto& d = impl_->snf.invariant_factors[i];
            if (d > 1) parts.push_back("Z/" + d.str());
        }
        if (parts.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "+" : "") + parts[i];
        return s;
    }

    std::string str() const {
        return "<" + std::to_string(gens()) + "|" + impl_->rels.str() + ">";
    }

    friend bool operator==(const FGModule& a, const FGModule& b) {
        return a.impl_ == b.impl_ || (a.gens() == b.gens() && a.rels() == b.rels());
    }

private:
    struct Impl {
        std::size_t gens = 0;
        IntMatrix rels;
        SNFResult snf;
    };
    std::shared_ptr<const Impl> impl_;
};

inline FGModule direct_sum(const FGModule& a, const FGModule& b) {
    return FGModule(a.gens() + b.gens(), block_diag(a.rels(), b.rels()));
}

/// Generator images as columns: mat is cod.gens × dom.gens.
struct ModuleHom {
    FGModule dom;
    FGModule cod;
    IntMatrix mat;
};

/// Lattice {x : M x ∈ L} where L is spanned by the columns of rels; returned as a column basis.
inline IntMatrix preimage_lattice(const IntMatrix& M, const IntMatrix& rels) {
    const std::size_t n = M.cols();
    auto K = kernel_basis(hstack(M, rels));
    return lattice_basis(K.block(0, 0, n, K.cols()));
}

/// Modules over Z, or over F_p when modulus is a prime p (objects are then expected to be killed by p).
class ModCategory {
public:
    using Object = FGModule;
    using Morphism = ModuleHom;

    ModCategory() = default;
    explicit ModCategory(long long modulus) : modulus_(modulus) {}

    long long modulus() const { return modulus_; }
    std::string name() const {
        return modulus_ == 0 ? "Mod(Z)" : "Vect(F_" + std::to_string(modulus_) + ")";
    }

    ModuleHom identity(const FGModule& x) const {
        return ModuleHom{x, x, IntMatrix::identity(x.gens())};
    }
    ModuleHom compose(const ModuleHom& g, const ModuleHom& f) const {
        if (!(f.cod == g.dom)) throw UsageError("Mod: composing non-composable maps");
        return ModuleHom{f.dom, g.cod, g.mat * f.mat};
    }
    bool equal(const ModuleHom& f, const ModuleHom& g) const {
        if (!(f.dom == g.dom) || !(f.cod == g.cod)) return false;
        auto d = f.mat - g.mat;
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (!f.cod.is_relation(d.column(j))) return false;
        return true;
    }
    bool same_object(const FGModule& x, const FGModule& y) const { return x == y; }
    FGModule domain(const ModuleHom& f) const { return f.dom; }
    FGModule codomain(const ModuleHom& f) const { return f.cod; }
    std::string describe(const FGModule& x) const { return x.structure() + x.str(); }
    std::string describe(const ModuleHom& f) const {
        return f.dom.structure() + "->" + f.cod.structure() + ":" + f.mat.str();
    }

    std::optional<std::string> validate(const ModuleHom& f) const {
        if (f.mat.rows() != f.cod.gens() || f.mat.cols() != f.dom.gens()) return "matrix shape mismatch";
        auto img = f.mat * f.dom.rels();
        for (std::size_t j = 0; j < img.cols(); ++j)
            if (!f.cod.is_relation(img.column(j))) return "relation not carried to a relation";
        return std::nullopt;
    }

    /// Apex = {(a,c) : r a − f c ∈ L_B} with the relations of A ⊕ C re-expressed in a basis.
    std::optional<Square<ModCategory>> pullback(const ModuleHom& r, const ModuleHom& f) const {
        if (!(r.cod == f.cod)) throw UsageError("Mod::pullback: not a cospan");
        const std::size_t nA = r.dom.gens(), nC = f.dom.gens();
        auto Kb = preimage_lattice(hstack(r.mat, IntMatrix(BigInt(-1) * f.mat)), r.cod.rels());
        const std::size_t k = Kb.cols();
        auto relsAC = block_diag(r.dom.rels(), f.dom.rels());
        auto snf = smith_normal_form(Kb);
        IntMatrix relsP(k, relsAC.cols());
        for (std::size_t j = 0; j < relsAC.cols(); ++j) {
            auto z = solve_integer(snf, relsAC.column(j));
            if (!z) throw std::logic_error("Mod::pullback: relation outside kernel lattice");
            relsP.set_column(j, *z);
        }
        FGModule P(k, relsP);
        return Square<ModCategory>{r, f, P, ModuleHom{P, r.dom, Kb.block(0, 0, nA, k)},
                                   ModuleHom{P, f.dom, Kb.block(nA, 0, nC, k)}};
    }

    /// h with pi0∘h = u and pi1∘h = v, solved modulo the relations of A ⊕ C.
    ModuleHom pair(const Square<ModCategory>& sq, const ModuleHom& u, const ModuleHom& v) const {
        auto legs = vstack(sq.pi0.mat, sq.pi1.mat);
        auto rels = block_diag(sq.pi0.cod.rels(), sq.pi1.cod.rels());
        auto snf = smith_normal_form(hstack(legs, rels));
        auto target = vstack(u.mat, v.mat);
        IntMatrix h(sq.apex.gens(), u.dom.gens());
        for (std::size_t j = 0; j < target.cols(); ++j) {
            auto z = solve_integer(snf, target.column(j));
            if (!z) throw UsageError("Mod::pair: legs do not form a cone");
            for (std::size_t i = 0; i < h.rows(); ++i) h(i, j) = (*z)[i];
        }
        return ModuleHom{u.dom, sq.apex, std::move(h)};
    }

    std::optional<ModuleHom> inverse(const ModuleHom& f) const {
        auto snf = smith_normal_form(hstack(f.mat, f.cod.rels()));
        IntMatrix g(f.dom.gens(), f.cod.gens());
        for (std::size_t j = 0; j < f.cod.gens(); ++j) {
            std::vector<BigInt> e(f.cod.gens());
            e[j] = 1;
            auto z = solve_integer(snf, e);
            if (!z) return std::nullopt;
            for (std::size_t i = 0; i < g.rows(); ++i) g(i, j) = (*z)[i];
        }
        ModuleHom inv{f.cod, f.dom, std::move(g)};
        if (validate(inv)) return std::nullopt;
        if (!equal(compose(inv, f), identity(f.dom))) return std::nullopt;
        if (!equal(compose(f, inv), identity(f.cod))) return std::nullopt;
        return inv;
    }

    ModuleHom add(const ModuleHom& f, const ModuleHom& g) const { return {f.dom, f.cod, f.mat + g.mat}; }
    ModuleHom sub(const ModuleHom& f, const ModuleHom& g) const { return {f.dom, f.cod, f.mat - g.mat}; }
    ModuleHom scale(const BigInt& s, const ModuleHom& f) const { return {f.dom, f.cod, s * f.mat}; }
    ModuleHom zero_map(const FGModule& x, const FGModule& y) const {
        return {x, y, IntMatrix(y.gens(), x.gens())};
    }

    /// Rank over Z, or dimension over F_p.
    std::size_t rank(const FGModule& x) const {
        return modulus_ == 0 ? x.rank() : x.rank_mod(BigInt(modulus_));
    }

    FGModule free(std::size_t n) const {
        return modulus_ == 0 ? FGModule::free(n) : FGModule::vector_space(modulus_, n);
    }

private:
    long long modulus_ = 0;
};

inline DimensionFunction<FGModule> rank_dimension(const ModCategory& cat, MonoidSpec m = nat_add()) {
    DimensionFunction<FGModule> d;
    d.name = cat.modulus() == 0 ? "rank" : "dimension";
    const bool integer = m.carrier == Carrier::integer;
    d.monoid = std::move(m);
    d.evaluate = [cat, integer](const FGModule& x) -> DimValue {
        std::size_t r = cat.rank(x);
        if (integer) return BigInt(r);
        return NatInf(r);
    };
    return d;
}

/// Image of a map as a presentation on the domain generators.
inline FGModule image_module(const ModuleHom& f) {
    return FGModule(f.dom.gens(), preimage_lattice(f.mat, f.cod.rels()));
}

/// Exactness of 0 → A -i-> B -q-> C → 0 and rank(A) + rank(C) = rank(B).
inline ViolationReport ses_rank_check(const ModCategory& cat, const ModuleHom& i, const ModuleHom& q) {
    ViolationReport rep("short exact sequence");
    Json w{{"A", i.dom.structure()}, {"B", i.cod.structure()}, {"C", q.cod.structure()}};
    auto ker_i = preimage_lattice(i.mat, i.cod.rels());
    bool injective = true;
    for (std::size_t j = 0; j < ker_i.cols(); ++j) injective = injective && i.dom.is_relation(ker_i.column(j));
    bool surjective = true;
    {
        auto snf = smith_normal_form(hstack(q.mat, q.cod.rels()));
        for (std::size_t j = 0; j < q.cod.gens() && surjective; ++j) {
            std::vector<BigInt> e(q.cod.gens());
            e[j] = 1;
            surjective = solve_integer(snf, e).has_value();
        }
    }
    bool middle = cat.equal(cat.compose(q, i), cat.zero_map(i.dom, q.cod));
    if (middle) {
        auto ker_q = preimage_lattice(q.mat, q.cod.rels());
        auto snf = smith_normal_form(hstack(i.mat, i.cod.rels()));
        for (std::size_t j = 0; j < ker_q.cols() && middle; ++j)
            middle = solve_integer(snf, ker_q.column(j)).has_value();
    }
    rep.expect("exact", injective && surjective && middle,
               Json{{"injective", injective}, {"surjective", surjective}, {"exact-in-middle", middle}});
    std::size_t a = cat.rank(i.dom), b = cat.rank(i.cod), c = cat.rank(q.cod);
    rep.expect("rank-additivity", a + c == b, w, std::to_string(a) + "+" + std::to_string(c),
               std::to_string(b));
    return rep;
}

namespace detail {

struct ModuleShape {
    std::size_t free_rank = 0;
    std::vector<long long> torsion;
};

inline ModuleShape random_shape(std::mt19937_64& rng, long long modulus) {
    ModuleShape s;
    if (modulus != 0) {
        s.torsion.assign(rng() % 3, modulus);
        return s;
    }
    static const long long orders[] = {2, 3, 4, 6};
    s.free_rank = rng() % 3;
    std::size_t nt = rng() % 3;
    for (std::size_t i = 0; i < nt; ++i) s.torsion.push_back(orders[rng() % 4]);
    return s;
}

inline FGModule build(const ModuleShape& s) { return FGModule::standard(s.free_rank, s.torsion); }

/// Random map D → B that is nonzero only on the free generators of D.
inline IntMatrix random_shear(std::mt19937_64& rng, const FGModule& B, const ModuleShape& D) {
    IntMatrix H(B.gens(), D.free_rank + D.torsion.size());
    for (std::size_t i = 0; i < B.gens(); ++i)
        for (std::size_t j = 0; j < D.free_rank; ++j) H(i, j) = static_cast<long long>(rng() % 5) - 2;
    return H;
}

}  // namespace detail

/// Split squares: r = [1 | H]: B ⊕ D → B with section [1; 0], and f either the inclusion of a
/// summand (section) or a sheared projection (retraction).
inline std::vector<AdmissibleSquare<ModCategory>> sample_module_squares(const ModCategory& cat,
                                                                       std::size_t budget,
                                                                       std::uint64_t seed) {
    std::vector<AdmissibleSquare<ModCategory>> out;
    std::mt19937_64 rng(seed);
    const long long p = cat.modulus();
    for (std::size_t t = 0; t < budget; ++t) {
        bool f_is_section = rng() % 2 == 0;
        auto sB = detail::random_shape(rng, p), sD = detail::random_shape(rng, p),
             sX = detail::random_shape(rng, p);
        FGModule B, Cm;
        ModuleHom f, f_other;
        if (f_is_section) {
            // B = C ⊕ X, f: C → B inclusion, retraction [1 | H'].
            auto C0 = detail::build(sB);
            auto X = detail::build(sX);
            B = direct_sum(C0, X);
            Cm = C0;
            IntMatrix inc(B.gens(), C0.gens());
            for (std::size_t i = 0; i < C0.gens(); ++i) inc(i, i) = 1;
            IntMatrix ret = hstack(IntMatrix::identity(C0.gens()), detail::random_shear(rng, C0, sX));
            f = ModuleHom{Cm, B, inc};
            f_other = ModuleHom{B, Cm, ret};
        } else {
            // C = B ⊕ X, f: C → B sheared projection, section inclusion.
            B = detail::build(sB);
            auto X = detail::build(sX);
            Cm = direct_sum(B, X);
            IntMatrix proj = hstack(IntMatrix::identity(B.gens()), detail::random_shear(rng, B, sX));
            IntMatrix inc(Cm.gens(), B.gens());
            for (std::size_t i = 0; i < B.gens(); ++i) inc(i, i) = 1;
            f = ModuleHom{Cm, B, proj};
            f_other = ModuleHom{B, Cm, inc};
        }
        auto A = direct_sum(B, detail::build(sD));
        IntMatrix rmat = hstack(IntMatrix::identity(B.gens()), detail::random_shear(rng, B, sD));
        IntMatrix smat(A.gens(), B.gens());
        for (std::size_t i = 0; i < B.gens(); ++i) smat(i, i) = 1;
        ModuleHom r{A, B, rmat}, s{B, A, smat};

        auto pb = cat.pullback(r, f);
        if (!pb) continue;
        AdmissibleSquare<ModCategory> adm;
        adm.label = "m" + std::to_string(t);
        adm.square = *pb;
        adm.r_witness = SectionRetraction<ModCategory>{s, r};
        adm.f_class.decided = true;
        if (f_is_section)
            adm.f_class.as_section = SectionRetraction<ModCategory>{f, f_other};
        else
            adm.f_class.as_retraction = SectionRetraction<ModCategory>{f_other, f};
        out.push_back(std::move(adm));
    }
    return out;
}

inline ViolationReport rank_dimension_check(const ModCategory& cat, std::size_t budget, std::uint64_t seed) {
    auto squares = sample_module_squares(cat, budget, seed);
    return verify_dimension_harness(cat, rank_dimension(cat), squares);
}

/// Finite-rank Z-algebra: a module with structure constants mult[i*n + j] = e_i·e_j.
struct ZAlgebra {
    FGModule module;
    std::vector<std::vector<long long>> mult;
};

/// Bilinearity check against the relations, then the rank of the underlying module.
inline DimensionFunction<ZAlgebra> algebra_rank_dimension() {
    DimensionFunction<ZAlgebra> d;
    d.name = "algebra-rank";
    d.monoid = nat_add();
    d.evaluate = [](const ZAlgebra& A) -> DimValue {
        const std::size_t n = A.module.gens();
        if (A.mult.size() != n * n) throw UsageError("ZAlgebra: need n^2 structure constants");
        const auto& R = A.module.rels();
        for (std::size_t c = 0; c < R.cols(); ++c)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<BigInt> left(n), right(n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t k = 0; k < n; ++k) {
                        left[k] += R(i, c) * A.mult[i * n + j][k];
                        right[k] += R(i, c) * A.mult[j * n + i][k];
                    }
                if (!A.module.is_relation(left) || !A.module.is_relation(right))
                    throw UsageError("ZAlgebra: multiplication not bilinear w.r.t. relations");
            }
        return NatInf(A.module.rank());
    };
    return d;
}

}  // namespace tandim
