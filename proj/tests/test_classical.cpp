#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_helpers.hpp"

using namespace ricciforge;
using namespace rftest;

TEST_CASE("su(2) basis and brackets") {
  CompactBuild b = build_compact(ClassicalFamily::su, 2);
  REQUIRE(b.algebra.dim() == 3);
  CHECK(b.algebra.labels[0].text == "H[e1-e2]");
  CHECK(b.algebra.labels[1].text == "X[e1-e2]");
  CHECK(b.algebra.labels[2].text == "Y[e1-e2]");
  CHECK(b.algebra.bracket.coeff(1, 2, 0) == 2);  // [X, Y] = 2 H
}

TEST_CASE("dimension formulas") {
  for (int m : {2, 3, 4}) {
    CompactBuild b = build_compact(ClassicalFamily::su, m);
    CHECK(b.algebra.dim() == m * m - 1);
  }
  for (int m : {3, 4, 5, 6}) {
    CompactBuild b = build_compact(ClassicalFamily::so, m);
    CHECK(b.algebra.dim() == m * (m - 1) / 2);
  }
  for (int m : {2, 3}) {
    CompactBuild b = build_compact(ClassicalFamily::sp, m);
    CHECK(b.algebra.dim() == m * (2 * m + 1));
  }
}

TEST_CASE("family minimums and notes") {
  CHECK_THROWS(build_compact(ClassicalFamily::su, 1));
  CHECK_THROWS(build_compact(ClassicalFamily::so, 2));
  CHECK_THROWS(build_compact(ClassicalFamily::sp, 1));
  CompactBuild so3 = build_compact(ClassicalFamily::so, 3);
  REQUIRE(!so3.algebra.notes.empty());
  CHECK(so3.algebra.notes[0].find("su(2)") != std::string::npos);
  CHECK(so3.algebra.dim() == 3);
}

TEST_CASE("root data") {
  // sp(2): positive roots e1 - e2, e1 + e2, 2 e1, 2 e2 and dim 10
  CompactBuild sp2 = build_compact(ClassicalFamily::sp, 2);
  REQUIRE(sp2.roots.positive_roots.size() == 4);
  std::set<std::vector<int>> roots(sp2.roots.positive_roots.begin(),
                                   sp2.roots.positive_roots.end());
  CHECK(roots.count({1, -1}) == 1);
  CHECK(roots.count({1, 1}) == 1);
  CHECK(roots.count({2, 0}) == 1);
  CHECK(roots.count({0, 2}) == 1);
  CHECK(sp2.algebra.dim() == 10);
  // basis order: simple Cartans first, then all X, then all Y
  CHECK(sp2.algebra.labels[0].kind == LabelKind::CartanH);
  CHECK(sp2.algebra.labels[1].kind == LabelKind::CartanH);
  for (int i = 2; i < 6; ++i) CHECK(sp2.algebra.labels[i].kind == LabelKind::RootX);
  for (int i = 6; i < 10; ++i) CHECK(sp2.algebra.labels[i].kind == LabelKind::RootY);

  // counts per family
  CHECK(build_compact(ClassicalFamily::su, 4).roots.positive_roots.size() == 6);   // A3
  CHECK(build_compact(ClassicalFamily::so, 5).roots.positive_roots.size() == 4);   // B2
  CHECK(build_compact(ClassicalFamily::so, 4).roots.positive_roots.size() == 2);   // D2
  CHECK(build_compact(ClassicalFamily::so, 6).roots.positive_roots.size() == 6);   // D3
  CHECK(build_compact(ClassicalFamily::sp, 3).roots.positive_roots.size() == 9);   // C3
}

TEST_CASE("root-shape of the brackets: [H, X] proportional to Y and back") {
  for (auto [fam, m] : std::vector<std::pair<ClassicalFamily, int>>{
           {ClassicalFamily::su, 3}, {ClassicalFamily::so, 5}, {ClassicalFamily::so, 4},
           {ClassicalFamily::sp, 2}}) {
    CompactBuild b = build_compact(fam, m);
    const LieAlgebra& L = b.algebra;
    for (int h = 0; h < L.dim(); ++h) {
      if (L.labels[h].kind != LabelKind::CartanH) continue;
      for (int x = 0; x < L.dim(); ++x) {
        if (L.labels[x].kind != LabelKind::RootX) continue;
        // the partner Y has the same root id
        int y = -1;
        for (int i = 0; i < L.dim(); ++i)
          if (L.labels[i].kind == LabelKind::RootY && L.labels[i].index == L.labels[x].index) y = i;
        REQUIRE(y >= 0);
        std::vector<Rat> hx = L.bracket.bracket_basis(h, x);
        std::vector<Rat> hy = L.bracket.bracket_basis(h, y);
        for (int k = 0; k < L.dim(); ++k) {
          if (hx[k] != 0) CHECK(k == y);  // [H, X^beta] is a multiple of Y^beta
          if (hy[k] != 0) CHECK(k == x);  // [H, Y^beta] is a multiple of X^beta
        }
      }
    }
  }
}

TEST_CASE("so(2l) embeds in so(2l+1) by erasing the last row and column") {
  CompactBuild so4 = build_compact(ClassicalFamily::so, 4);
  CompactBuild so5 = build_compact(ClassicalFamily::so, 5);
  // match the shared long-root generators by label text
  for (int i = 0; i < so4.algebra.dim(); ++i) {
    const BasisLabel& l4 = so4.algebra.labels[i];
    if (l4.kind == LabelKind::CartanH) continue;  // Cartan bases differ between B2 and D2
    int j = -1;
    for (int p = 0; p < so5.algebra.dim(); ++p)
      if (so5.algebra.labels[p].text == l4.text) j = p;
    REQUIRE(j >= 0);
    // the 5x5 matrix restricted to the top-left 4x4 equals the 4x4 matrix
    const CMat& m5 = so5.realization.matrices[j];
    const CMat& m4 = so4.realization.matrices[i];
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        CHECK(m5.re(r, c) == m4.re(r, c));
        CHECK(m5.im(r, c) == m4.im(r, c));
      }
    // and the erased row/column vanish for the shared generators
    for (int r = 0; r < 5; ++r) {
      CHECK(m5.re(r, 4) == 0);
      CHECK(m5.re(4, r) == 0);
    }
  }
  // embedded commutator tables agree: [A, B] computed in 5x5 padded matrices
  // equals the padded 4x4 commutator
  for (int i = 0; i < so4.algebra.dim(); ++i)
    for (int j = i + 1; j < so4.algebra.dim(); ++j) {
      if (so4.algebra.labels[i].kind == LabelKind::CartanH ||
          so4.algebra.labels[j].kind == LabelKind::CartanH)
        continue;
      int i5 = -1, j5 = -1;
      for (int p = 0; p < so5.algebra.dim(); ++p) {
        if (so5.algebra.labels[p].text == so4.algebra.labels[i].text) i5 = p;
        if (so5.algebra.labels[p].text == so4.algebra.labels[j].text) j5 = p;
      }
      CMat c4 = so4.realization.matrices[i].commutator(so4.realization.matrices[j]);
      CMat c5 = so5.realization.matrices[i5].commutator(so5.realization.matrices[j5]);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(c5.re(r, c) == c4.re(r, c));
    }
}

TEST_CASE("closure: commutators expand exactly in the realization span") {
  // expand() throws when a commutator leaves the span; crosscheck one value
  CompactBuild su3 = build_compact(ClassicalFamily::su, 3);
  const auto& real = su3.realization;
  CMat c = real.matrices[2].commutator(real.matrices[5]);
  std::vector<Rat> coeff = real.expand(c);
  std::vector<Rat> tensor_row = su3.algebra.bracket.bracket_basis(2, 5);
  for (int k = 0; k < su3.algebra.dim(); ++k) CHECK(coeff[k] == tensor_row[k]);
}

TEST_CASE("sl(2,R) eigenvector basis") {
  NoncompactBuild b = build_noncompact_sl(2, false);
  REQUIRE(b.algebra.dim() == 3);
  // H = diag(1,-1), X = [[0,1],[-1,0]], Y = [[0,1],[1,0]]
  const CMat& H = b.realization.matrices[0];
  const CMat& X = b.realization.matrices[1];
  const CMat& Y = b.realization.matrices[2];
  CHECK(H.re(0, 0) == 1);
  CHECK(H.re(1, 1) == -1);
  CHECK(H.im.is_zero());
  CHECK(X.re(0, 1) == 1);
  CHECK(X.re(1, 0) == -1);
  CHECK(Y.re(0, 1) == 1);
  CHECK(Y.re(1, 0) == 1);
  // oracle: multiply the matrices by hand
  CHECK(X.commutator(Y) == H * Rat(2));
  CHECK(H.commutator(Y) == X * Rat(2));
  CHECK(H.commutator(X) == Y * Rat(2));
  CHECK(b.algebra.bracket.coeff(1, 2, 0) == 2);
  CHECK(b.algebra.bracket.coeff(0, 2, 1) == 2);
  CHECK(b.algebra.bracket.coeff(0, 1, 2) == 2);

  // Killing form diagonal with signature (+, -, +) on (H, X, Y)
  RatMatrix K = killing_form(b.algebra);
  CHECK(K(0, 0) == 8);
  CHECK(K(1, 1) == -8);
  CHECK(K(2, 2) == 8);
  CHECK(K(0, 1) == 0);
  CHECK(K(1, 2) == 0);
}

TEST_CASE("gl(m,R) variant prepends the center") {
  NoncompactBuild b = build_noncompact_sl(3, true);
  CHECK(b.algebra.dim() == 9);
  CHECK(b.algebra.labels[0].kind == LabelKind::Z);
  // Z is central
  for (int j = 1; j < 9; ++j) CHECK(all_zero(b.algebra.bracket.bracket_basis(0, j)));
}

TEST_CASE("so_variables") {
  auto v4 = so_variables(4);
  REQUIRE(v4.size() == 4);
  // z1 = x1 + i x2
  CHECK(v4[0].terms[0] == std::pair{0, std::pair{Rat(1), Rat(0)}});
  CHECK(v4[0].terms[1] == std::pair{1, std::pair{Rat(0), Rat(1)}});
  // z2 = x1 - i x2
  CHECK(v4[1].terms[1] == std::pair{1, std::pair{Rat(0), Rat(-1)}});
  // z3 = x3 + i x4
  CHECK(v4[2].terms[0] == std::pair{2, std::pair{Rat(1), Rat(0)}});

  auto v5 = so_variables(5);
  REQUIRE(v5.size() == 5);
  CHECK(v5[4].terms.size() == 1);
  CHECK(v5[4].terms[0] == std::pair{4, std::pair{Rat(1), Rat(0)}});  // z5 = x5

  auto v2 = so_variables(2);
  REQUIRE(v2.size() == 2);
  CHECK(v2[0].terms.size() == 2);
}

TEST_CASE("root datum validation rejects bad counts") {
  RootDatum rd;
  rd.family = RootFamily::A;
  rd.rank = 2;
  rd.positive_roots = {{1, -1, 0}, {1, 0, -1}};  // missing one
  rd.simple_indices = {0};
  CHECK_THROWS(rd.validate());
}
