#include <catch2/catch_amalgamated.hpp>

#include "orthex/oracle.hpp"

using namespace orthex;

namespace {

GroupFactor so(int n) { return {Pres::SO, n}; }
GroupFactor sl(int n) { return {Pres::SL, n}; }
GroupFactor sp(int n) { return {Pres::SP, n}; }
GroupFactor g2f() { return {Pres::G2, 7}; }

ModuleSummand summand(const GroupSpec& g, std::vector<std::pair<int, Weight>> parts,
                      long mult = 1) {
    ModuleSummand s;
    for (const auto& f : g.factors) s.slots.push_back(Weight(f.rank(), 0));
    for (auto& [idx, w] : parts) s.slots[idx] = w;
    s.charges.resize(g.torus_rank, 0);
    s.mult = mult;
    return s;
}

MatrixRep build1(GroupFactor f, Weight w, long mult = 1) {
    GroupSpec g{{f}, 0};
    ModuleSpec v{{summand(g, {{0, w}}, mult)}};
    return rep_build(g, v);
}

}  // namespace

TEST_CASE("defining realizations") {
    MatrixRep so8 = build1(so(8), so(8).phi(1));
    CHECK(so8.space_dim == 8);
    CHECK(so8.gens.size() == 28);
    CHECK(so8.algebra_dim == 28);
    validate_rep(so8);
    validate_forms(so8);

    MatrixRep sp4 = build1(sp(4), sp(4).phi(1));
    CHECK(sp4.gens.size() == 10);
    validate_rep(sp4);
    validate_forms(sp4);

    MatrixRep sl4 = build1(sl(4), sl(4).phi(1));
    CHECK(sl4.gens.size() == 15);
    validate_rep(sl4);

    // so(3) is A1 realized on C^3.
    MatrixRep so3 = build1(so(3), so(3).phi(1));
    CHECK(so3.space_dim == 3);
    CHECK(so3.gens.size() == 3);
    validate_rep(so3);
}

TEST_CASE("spin representation of so7") {
    MatrixRep spin7 = build1(so(7), so(7).phi(3));
    CHECK(spin7.space_dim == 8);
    CHECK(spin7.gens.size() == 21);
    CHECK(spin7.algebra_dim == 21);
    validate_rep(spin7);
    // It preserves a symmetric form.
    auto forms = invariant_bilinear_forms_weighted(spin7.gens, 8);
    REQUIRE(forms.size() == 1);
    CHECK(forms[0].transpose() == forms[0]);
}

TEST_CASE("spin representation of so9 and half-spins") {
    MatrixRep spin9 = build1(so(9), so(9).phi(4));
    CHECK(spin9.space_dim == 16);
    CHECK(spin9.gens.size() == 36);
    validate_rep(spin9);

    MatrixRep half10 = build1(so(10), so(10).phi(5));
    CHECK(half10.space_dim == 16);
    CHECK(half10.gens.size() == 45);
    validate_rep(half10);
}

TEST_CASE("exterior and symmetric functors") {
    MatrixRep lam2 = build1(sl(4), sl(4).phi(2));
    CHECK(lam2.space_dim == 6);  // oracle route to the dim of Lambda^2 C^4
    validate_rep(lam2);
    auto forms = invariant_bilinear_forms_weighted(lam2.gens, 6);
    REQUIRE(forms.size() == 1);
    CHECK(forms[0].transpose() == forms[0]);  // phi_2 of sl4 is orthogonal

    MatrixRep lam20 = build1(sp(4), sp(4).phi(2));
    CHECK(lam20.space_dim == 5);  // symplectically traceless part
    validate_rep(lam20);
}

TEST_CASE("g2 build") {
    MatrixRep g2 = build1(g2f(), g2f().phi(1));
    CHECK(g2.space_dim == 7);
    CHECK(g2.gens.size() == 14);
    CHECK(g2.algebra_dim == 14);
    validate_rep(g2);
    validate_forms(g2);
}

TEST_CASE("multi-summand builds close under bracket") {
    // so8 on phi_1 + phi_3: this pins the spin normalization exactly.
    GroupSpec g{{so(8)}, 0};
    ModuleSpec v{{summand(g, {{0, so(8).phi(1)}}), summand(g, {{0, so(8).phi(3)}})}};
    MatrixRep r = rep_build(g, v);
    CHECK(r.space_dim == 16);
    validate_rep(r);
}

TEST_CASE("orbit dimensions") {
    MatrixRep so8 = build1(so(8), so(8).phi(1));
    CHECK(generic_orbit_dim(so8, 1) == 7);
    RatVec zero(8);
    CHECK(orbit_dim(so8, zero) == 0);

    MatrixRep spin7 = build1(so(7), so(7).phi(3));
    CHECK(generic_orbit_dim(spin7, 1) == 7);

    // SO8 x SO3 on phi_1 (x) phi_1: generic orbit dimension 21 (A9: nu = 3).
    GroupSpec g{{so(8), so(3)}, 0};
    ModuleSpec v{{summand(g, {{0, so(8).phi(1)}, {1, so(3).phi(1)}})}};
    MatrixRep r = rep_build(g, v);
    CHECK(r.space_dim == 24);
    CHECK(generic_orbit_dim(r, 1) == 21);
}

TEST_CASE("stabilizers in general position") {
    // SO8 on 2 phi_1 -> so6 (dim 15); on phi_1 + phi_3 -> g2 (dim 14).
    MatrixRep two_phi1 = build1(so(8), so(8).phi(1), 2);
    std::mt19937_64 rng(5);
    RatVec v = random_vector(two_phi1.space_dim, rng);
    auto stab = stabilizer_basis(two_phi1, v);
    CHECK(stab.size() == 15);

    GroupSpec g{{so(8)}, 0};
    ModuleSpec mixed{{summand(g, {{0, so(8).phi(1)}}), summand(g, {{0, so(8).phi(3)}})}};
    MatrixRep r = rep_build(g, mixed);
    RatVec w = random_vector(r.space_dim, rng);
    auto stab2 = stabilizer_coeffs(r, w);
    CHECK(stab2.size() == 14);
    CHECK(stab2.size() + orbit_dim(r, w) == r.gens.size());
}

TEST_CASE("projection dimension of a diagonal stabilizer") {
    // SL2 x SL2 on C^2 (x) C^2: the generic stabilizer is a diagonal sl2.
    GroupSpec g{{sl(2), sl(2)}, 0};
    ModuleSpec v{{summand(g, {{0, {1}}, {1, {1}}})}};
    MatrixRep r = rep_build(g, v);
    std::mt19937_64 rng(3);
    RatVec pt = random_vector(4, rng);
    auto stab = stabilizer_coeffs(r, pt);
    REQUIRE(stab.size() == 3);
    CHECK(projection_dim(stab, r.factor_gens[0].first, r.factor_gens[0].second) == 3);
}

TEST_CASE("embedded spin7 inside so8") {
    TripleSpec t;
    t.G = {{so(8)}, 0};
    t.H = {{so(7)}, 0};
    t.emb.entries = {{EmbedKind::Spin, {0}, {0}, {}}};
    t.V.summands = {summand(t.G, {{0, so(8).phi(1)}})};
    MatrixRep g = rep_build_g(t);
    MatrixRep h = embed_h(t, g);
    CHECK(h.gens.size() == 21);
    CHECK(h.algebra_dim == 21);
    CHECK(h_inside_g(h, g));
    // F2: exceptional with nu = 1.
    OracleVerdict v = is_exceptional_oracle(t, 1);
    CHECK(v.exceptional);
    CHECK(v.g_orbit_dim == 7);
    CHECK(v.codim == 1);
}

TEST_CASE("embedded spin7 acting on phi1 + phi3 of so8") {
    TripleSpec t;
    t.G = {{so(8)}, 0};
    t.H = {{so(7)}, 0};
    t.emb.entries = {{EmbedKind::Spin, {0}, {0}, {}}};
    t.V.summands = {summand(t.G, {{0, so(8).phi(1)}}), summand(t.G, {{0, so(8).phi(3)}})};
    MatrixRep g = rep_build_g(t);
    MatrixRep h = embed_h(t, g);
    CHECK(h.gens.size() == 21);
    CHECK(g.space_dim == 16);
    CHECK(h_inside_g(h, g));
}

TEST_CASE("negative control: Sp4 in SL4 on two copies of C^4") {
    TripleSpec t;
    t.G = {{sl(4)}, 0};
    t.H = {{sp(4)}, 0};
    t.emb.entries = {{EmbedKind::DefiningSub, {0}, {0}, {}}};
    t.V.summands = {summand(t.G, {{0, sl(4).phi(1)}}, 2)};
    OracleVerdict v = is_exceptional_oracle(t, 1);
    CHECK_FALSE(v.exceptional);
    CHECK(v.h_orbit_dim == 7);
    CHECK(v.g_orbit_dim == 8);
}

TEST_CASE("trivial triple H = G") {
    TripleSpec t;
    t.G = {{so(8)}, 0};
    t.H = {{so(8)}, 0};
    t.emb.entries = {{EmbedKind::Id, {0}, {0}, {}}};
    t.V.summands = {summand(t.G, {{0, so(8).phi(1)}})};
    OracleVerdict v = is_exceptional_oracle(t, 1);
    CHECK(v.exceptional);
    CHECK(v.codim == 1);
}

TEST_CASE("seed stability of generic orbit dimensions") {
    GroupSpec g{{so(8), so(3)}, 0};
    ModuleSpec v{{summand(g, {{0, so(8).phi(1)}, {1, so(3).phi(1)}})}};
    MatrixRep r = rep_build(g, v);
    CHECK(generic_orbit_dim(r, 1) == generic_orbit_dim(r, 2));
}

TEST_CASE("form type matches the oracle's bilinear solve on catalog irreps") {
    struct Case {
        GroupFactor f;
        Weight w;
    };
    std::vector<Case> cases = {
        {so(7), so(7).phi(1)},  {so(7), so(7).phi(3)},  {so(8), so(8).phi(1)},
        {so(8), so(8).phi(3)},  {so(8), so(8).phi(4)},  {so(9), so(9).phi(4)},
        {so(10), so(10).phi(5)}, {so(12), so(12).phi(5)}, {sl(2), {1}},
        {sl(2), {2}},           {sl(3), sl(3).phi(1)},  {sl(4), sl(4).phi(2)},
        {sl(5), sl(5).phi(2)},  {sp(4), sp(4).phi(1)},  {sp(4), sp(4).phi(2)},
        {sp(6), sp(6).phi(1)},  {so(3), so(3).phi(1)},  {so(5), so(5).phi(2)},
        {so(6), so(6).phi(1)},  {g2f(), g2f().phi(1)},
    };
    for (const auto& c : cases) {
        MatrixRep r = build1(c.f, c.w);
        auto forms = invariant_bilinear_forms_weighted(r.gens, r.space_dim);
        FormType ft = form_type({c.f.type(), c.w});
        INFO(to_string(c.f) << " weight irrep, expected " << to_string(ft));
        if (ft == FormType::complex) {
            CHECK(forms.empty());
        } else {
            REQUIRE(forms.size() == 1);
            bool sym = forms[0].transpose() == forms[0];
            CHECK(sym == (ft == FormType::orthogonal));
        }
    }
}
