#pragma once

// The shipped presentations: O(SU_q(3)), O(U_q(2)), O(SU_q(2)), O(T^2),
// O(T^1), their Hopf structures, the epimorphisms pi, pihat0, pihat1, p,
// and the Haar functionals.

#include "qhopf/mapspec.hpp"

#include <array>
#include <memory>

namespace qhopf {

struct HopfStructure {
    const Presentation* P = nullptr;
    MapSpec delta;               // into_tensor {P,P}
    std::vector<Scalar> counit;  // per letter
    MapSpec antipode;            // anti_hom P -> P
};

struct SUq3Options {
    // Eq. u* as printed repeats the row index i1 in its second term; the
    // quantum-minor reading replaces it by i2.  The unitarity oracle picks
    // the minor variant; the printed one is kept for the resolution test.
    bool star_paper_literal = false;
    bool include_unitarity = true;
};

namespace su3 {

inline int idx(int i, int j) { return 3 * (i - 1) + (j - 1); }

inline int inversions(const std::array<int, 3>& s) {
    int n = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (s[a] > s[b]) ++n;
    return n;
}

// the two indices of {1,2,3} \ {i}, ascending
inline std::pair<int, int> others(int i) {
    switch (i) {
        case 1: return {2, 3};
        case 2: return {1, 3};
        default: return {1, 2};
    }
}

}  // namespace su3

inline std::unique_ptr<Presentation> build_SUq3(const SUq3Options& opt = {},
                                                const RewriteLimits& lim = {}) {
    auto P = std::make_unique<Presentation>();
    P->name = "SUq3";
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            P->letters.push_back("u" + std::to_string(i) + std::to_string(j));
    for (int i = 1; i <= 3; ++i) {
        P->degrees.push_back({1, 0});
        P->degrees.push_back({0, 1});
        P->degrees.push_back({-1, -1});
    }
    auto u = [&](int i, int j) { return P->gen(su3::idx(i, j)); };
    Scalar q = Scalar::q();

    // star images via quantum cofactors: u_ij^* = (-q)^(j-i) (u_i1j1 u_i2j2 - q u_i1j2 u_?j1)
    P->star_images.resize(9);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            auto [i1, i2] = su3::others(i);
            auto [j1, j2] = su3::others(j);
            int second_row = opt.star_paper_literal ? i1 : i2;
            Element m = u(i1, j1) * u(i2, j2) - q * (u(i1, j2) * u(second_row, j1));
            P->star_images[static_cast<size_t>(su3::idx(i, j))] = Scalar::neg_q_pow(j - i) * m;
        }
    auto ustar = [&](int i, int j) { return P->star_images[static_cast<size_t>(su3::idx(i, j))]; };

    // quantum-matrix relations
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = j + 1; k <= 3; ++k)
                P->relations.push_back(u(i, j) * u(i, k) - q * (u(i, k) * u(i, j)));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = j + 1; k <= 3; ++k)
                P->relations.push_back(u(j, i) * u(k, i) - q * (u(k, i) * u(j, i)));
    for (int i = 1; i <= 3; ++i)
        for (int k = i + 1; k <= 3; ++k)
            for (int j = 1; j <= 3; ++j)
                for (int m = 1; m < j; ++m)
                    P->relations.push_back(u(i, j) * u(k, m) - u(k, m) * u(i, j));
    for (int i = 1; i <= 3; ++i)
        for (int k = i + 1; k <= 3; ++k)
            for (int j = 1; j <= 3; ++j)
                for (int m = j + 1; m <= 3; ++m)
                    P->relations.push_back(u(i, j) * u(k, m) - u(k, m) * u(i, j) -
                                           (q - Scalar::q_pow(-1)) * (u(i, m) * u(k, j)));

    // q-determinant family, all row triples (j1,j2,j3)
    static const std::array<std::array<int, 3>, 6> perms = {
        {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};
    for (int j1 = 1; j1 <= 3; ++j1)
        for (int j2 = 1; j2 <= 3; ++j2)
            for (int j3 = 1; j3 <= 3; ++j3) {
                Element rel(P.get());
                for (auto& s : perms) {
                    Element t = u(j1, s[0]) * u(j2, s[1]) * u(j3, s[2]);
                    rel += Scalar::neg_q_pow(su3::inversions(s)) * t;
                }
                bool distinct = j1 != j2 && j1 != j3 && j2 != j3;
                if (distinct)
                    rel -= P->scalar(Scalar::neg_q_pow(su3::inversions({j1, j2, j3})));
                P->relations.push_back(rel);
            }

    // unitarity families with stars expanded
    if (opt.include_unitarity) {
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                Element row(P.get()), col(P.get());
                for (int k = 1; k <= 3; ++k) {
                    row += u(i, k) * ustar(j, k);
                    col += ustar(k, i) * u(k, j);
                }
                if (i == j) {
                    row -= P->unit();
                    col -= P->unit();
                }
                P->relations.push_back(row);
                P->relations.push_back(col);
            }
    }
    finalize_rules(*P, true, lim);
    return P;
}

inline std::unique_ptr<Presentation> build_Uq2(const RewriteLimits& lim = {}) {
    auto P = std::make_unique<Presentation>();
    P->name = "Uq2";
    P->letters = {"u", "u*", "gamma", "gamma*", "alpha", "alpha*"};
    P->degrees = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {0, 1}, {0, -1}};
    Element U = P->gen(0), Us = P->gen(1), g = P->gen(2), gs = P->gen(3), a = P->gen(4),
            as = P->gen(5);
    P->star_images = {Us, U, gs, g, as, a};
    Scalar q = Scalar::q();
    P->relations = {
        a * g - q * (g * a),
        a * gs - q * (gs * a),
        g * gs - gs * g,
        gs * as - q * (as * gs),
        g * as - q * (as * g),
        as * a + g * gs - P->unit(),
        a * as + Scalar::q_pow(2) * (g * gs) - P->unit(),
        U * Us - P->unit(),
        Us * U - P->unit(),
    };
    for (const Element& x : {g, gs, a, as}) {
        P->relations.push_back(U * x - x * U);
        P->relations.push_back(Us * x - x * Us);
    }
    finalize_rules(*P, true, lim);
    return P;
}

inline std::unique_ptr<Presentation> build_SUq2(const RewriteLimits& lim = {}) {
    auto P = std::make_unique<Presentation>();
    P->name = "SUq2";
    P->letters = {"gamma", "gamma*", "alpha", "alpha*"};
    P->degrees = {{0, 1}, {0, -1}, {0, 1}, {0, -1}};
    Element g = P->gen(0), gs = P->gen(1), a = P->gen(2), as = P->gen(3);
    P->star_images = {gs, g, as, a};
    Scalar q = Scalar::q();
    P->relations = {
        a * g - q * (g * a),
        a * gs - q * (gs * a),
        g * gs - gs * g,
        gs * as - q * (as * gs),
        g * as - q * (as * g),
        as * a + g * gs - P->unit(),
        a * as + Scalar::q_pow(2) * (g * gs) - P->unit(),
    };
    finalize_rules(*P, true, lim);
    return P;
}

inline std::unique_ptr<Presentation> build_torus(const std::string& name,
                                                 const std::vector<std::string>& gens,
                                                 const RewriteLimits& lim = {}) {
    auto P = std::make_unique<Presentation>();
    P->name = name;
    for (auto& gname : gens) {
        P->letters.push_back(gname);
        P->letters.push_back(gname + "*");
    }
    for (size_t i = 0; i < gens.size(); ++i) {
        Degree d = (i == 0) ? Degree{1, 0} : Degree{0, 1};
        P->degrees.push_back(d);
        P->degrees.push_back(-d);
    }
    size_t n = P->letters.size();
    P->star_images.resize(n);
    for (size_t i = 0; i < n; i += 2) {
        P->star_images[i] = P->gen(static_cast<int>(i + 1));
        P->star_images[i + 1] = P->gen(static_cast<int>(i));
        P->relations.push_back(P->gen(static_cast<int>(i)) * P->gen(static_cast<int>(i + 1)) -
                               P->unit());
        P->relations.push_back(P->gen(static_cast<int>(i + 1)) * P->gen(static_cast<int>(i)) -
                               P->unit());
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (i / 2 == j / 2) continue;
            P->relations.push_back(P->gen(static_cast<int>(i)) * P->gen(static_cast<int>(j)) -
                                   P->gen(static_cast<int>(j)) * P->gen(static_cast<int>(i)));
        }
    finalize_rules(*P, true, lim);
    return P;
}

// ---------------------------------------------------------------------------
// The bundle: presentations + Hopf structures + the paper's maps
// ---------------------------------------------------------------------------

struct StandardAlgebras {
    std::vector<std::unique_ptr<Presentation>> store;
    Presentation* SUq3 = nullptr;
    Presentation* Uq2 = nullptr;
    Presentation* SUq2 = nullptr;
    Presentation* T2 = nullptr;
    Presentation* T1 = nullptr;

    HopfStructure hSUq3, hUq2, hSUq2, hT2, hT1;
    MapSpec pi;      // O(SU_q(3)) ->> O(U_q(2))
    MapSpec pihat0;  // O(SU_q(3)) ->> O(T^2)
    MapSpec pihat1;  // O(U_q(2))  ->> O(T^2)
    MapSpec p;       // O(U_q(2))  ->> O(SU_q(2))

    const Presentation* by_name(const std::string& n) const {
        for (auto& p_ : store)
            if (p_->name == n) return p_.get();
        return nullptr;
    }
    const HopfStructure& hopf(const Presentation* P) const {
        if (P == SUq3) return hSUq3;
        if (P == Uq2) return hUq2;
        if (P == SUq2) return hSUq2;
        if (P == T2) return hT2;
        if (P == T1) return hT1;
        throw error("no Hopf structure for " + (P ? P->name : std::string("<null>")));
    }
    const MapSpec* map_by_name(const std::string& n) const {
        for (const MapSpec* m : {&pi, &pihat0, &pihat1, &p})
            if (m->name == n) return m;
        return nullptr;
    }
};

namespace detail {

inline HopfStructure matrix_hopf_SUq3(Presentation* P) {
    HopfStructure H;
    H.P = P;
    H.delta.name = "Delta_SUq3";
    H.delta.kind = MapKind::into_tensor;
    H.delta.src = P;
    H.delta.tensor_tgt = {P, P};
    H.counit.assign(9, Scalar::zero());
    H.antipode.name = "S_SUq3";
    H.antipode.kind = MapKind::anti_hom;
    H.antipode.src = P;
    H.antipode.tgt = P;
    H.antipode.images.resize(9);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            TensorElement d({P, P});
            for (int k = 1; k <= 3; ++k)
                d += tensor(P->gen(su3::idx(i, k)), P->gen(su3::idx(k, j)));
            H.delta.tensor_images.push_back(d);
            H.counit[static_cast<size_t>(su3::idx(i, j))] =
                i == j ? Scalar::one() : Scalar::zero();
            // S(u_ij) = u_ji^*
            H.antipode.images[static_cast<size_t>(su3::idx(i, j))] =
                P->star_images[static_cast<size_t>(su3::idx(j, i))];
        }
    H.delta.validate();
    H.antipode.validate();
    return H;
}

inline HopfStructure hopf_Uq2(Presentation* P) {
    Element U = P->gen(0), Us = P->gen(1), g = P->gen(2), gs = P->gen(3), a = P->gen(4),
            as = P->gen(5);
    Scalar q = Scalar::q();
    HopfStructure H;
    H.P = P;
    H.delta = {"Delta_Uq2", P, nullptr, {P, P}, MapKind::into_tensor, {}, {}};
    H.delta.tensor_images = {
        tensor(U, U),
        tensor(Us, Us),
        tensor(g, a) + tensor(as * Us, g),                    // Delta(gamma)
        tensor(gs, as) + tensor(U * a, gs),                   // Delta(gamma*)
        tensor(a, a) + Scalar(-1) * q * tensor(gs * Us, g),   // Delta(alpha)
        tensor(as, as) + Scalar(-1) * q * tensor(U * g, gs),  // Delta(alpha*)
    };
    H.counit = {Scalar::one(), Scalar::one(), Scalar::zero(),
                Scalar::zero(), Scalar::one(), Scalar::one()};
    H.antipode = {"S_Uq2", P, P, {}, MapKind::anti_hom, {}, {}};
    H.antipode.images = {Us, U, Scalar(-1) * q * (U * g), -Scalar::q_pow(-1) * (Us * gs), as, a};
    H.delta.validate();
    H.antipode.validate();
    return H;
}

inline HopfStructure hopf_SUq2(Presentation* P) {
    Element g = P->gen(0), gs = P->gen(1), a = P->gen(2), as = P->gen(3);
    Scalar q = Scalar::q();
    HopfStructure H;
    H.P = P;
    H.delta = {"Delta_SUq2", P, nullptr, {P, P}, MapKind::into_tensor, {}, {}};
    H.delta.tensor_images = {
        tensor(g, a) + tensor(as, g),
        tensor(gs, as) + tensor(a, gs),
        tensor(a, a) + Scalar(-1) * q * tensor(gs, g),
        tensor(as, as) + Scalar(-1) * q * tensor(g, gs),
    };
    H.counit = {Scalar::zero(), Scalar::zero(), Scalar::one(), Scalar::one()};
    H.antipode = {"S_SUq2", P, P, {}, MapKind::anti_hom, {}, {}};
    H.antipode.images = {Scalar(-1) * q * g, -Scalar::q_pow(-1) * gs, as, a};
    H.delta.validate();
    H.antipode.validate();
    return H;
}

inline HopfStructure hopf_grouplike(Presentation* P) {
    HopfStructure H;
    H.P = P;
    H.delta = {"Delta_" + P->name, P, nullptr, {P, P}, MapKind::into_tensor, {}, {}};
    H.antipode = {"S_" + P->name, P, P, {}, MapKind::anti_hom, {}, {}};
    for (size_t i = 0; i < P->letters.size(); ++i) {
        Element x = P->gen(static_cast<int>(i));
        H.delta.tensor_images.push_back(tensor(x, x));
        H.counit.push_back(Scalar::one());
        H.antipode.images.push_back(P->star_images[i]);
    }
    H.delta.validate();
    H.antipode.validate();
    return H;
}

}  // namespace detail

inline StandardAlgebras build_standard_algebras(const SUq3Options& opt = {},
                                                const RewriteLimits& lim = {}) {
    StandardAlgebras S;
    S.store.push_back(build_SUq3(opt, lim));
    S.store.push_back(build_Uq2(lim));
    S.store.push_back(build_SUq2(lim));
    S.store.push_back(build_torus("T2", {"U1", "U2"}, lim));
    S.store.push_back(build_torus("T1", {"u"}, lim));
    S.SUq3 = S.store[0].get();
    S.Uq2 = S.store[1].get();
    S.SUq2 = S.store[2].get();
    S.T2 = S.store[3].get();
    S.T1 = S.store[4].get();

    S.hSUq3 = detail::matrix_hopf_SUq3(S.SUq3);
    S.hUq2 = detail::hopf_Uq2(S.Uq2);
    S.hSUq2 = detail::hopf_SUq2(S.SUq2);
    S.hT2 = detail::hopf_grouplike(S.T2);
    S.hT1 = detail::hopf_grouplike(S.T1);

    Presentation *A = S.SUq3, *H = S.Uq2, *K = S.SUq2, *T = S.T2;
    Element zeroH(H), zeroT(T);
    Scalar q = Scalar::q();

    // pi: u |-> v  (Eq. pi / uq2)
    S.pi = {"pi", A, H, {}, MapKind::hom, {}, {}};
    S.pi.images.assign(9, zeroH);
    S.pi.images[su3::idx(1, 1)] = H->gen("u");
    S.pi.images[su3::idx(2, 2)] = H->gen("alpha");
    S.pi.images[su3::idx(2, 3)] = Scalar(-1) * q * (H->gen("gamma*") * H->gen("u*"));
    S.pi.images[su3::idx(3, 2)] = H->gen("gamma");
    S.pi.images[su3::idx(3, 3)] = H->gen("alpha*") * H->gen("u*");
    S.pi.validate();

    // pihat0: diagonal torus in SU_q(3)
    S.pihat0 = {"pihat0", A, T, {}, MapKind::hom, {}, {}};
    S.pihat0.images.assign(9, zeroT);
    S.pihat0.images[su3::idx(1, 1)] = T->gen("U1");
    S.pihat0.images[su3::idx(2, 2)] = T->gen("U2");
    S.pihat0.images[su3::idx(3, 3)] = T->gen("U1*") * T->gen("U2*");
    S.pihat0.validate();

    // pihat1: torus in U_q(2)
    S.pihat1 = {"pihat1", H, T, {}, MapKind::hom, {}, {}};
    S.pihat1.images = {T->gen("U1"), T->gen("U1*"), zeroT, zeroT, T->gen("U2"), T->gen("U2*")};
    S.pihat1.validate();

    // p: forget the central unitary (Eq. ses)
    S.p = {"p", H, K, {}, MapKind::hom, {}, {}};
    S.p.images = {K->unit(), K->unit(), K->gen("gamma"), K->gen("gamma*"), K->gen("alpha"),
                  K->gen("alpha*")};
    S.p.validate();
    return S;
}

}  // namespace qhopf
