// Copyright 2026 The sublocal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <functional>

#include "doctest.h"
#include "oracles.hpp"
#include "sublocal/classify.hpp"
#include "sublocal/dilation.hpp"
#include "sublocal/errors.hpp"
#include "sublocal/generators.hpp"
#include "sublocal/hamiltonian.hpp"
#include "sublocal/secondq.hpp"

using namespace sublocal;

namespace {

constexpr SLTag kTags[] = {SLTag::C1, SLTag::C2, SLTag::C3, SLTag::C4};

ChannelShape draw_shape(Rng& rng, std::size_t max_part = 3) {
  return {SubspaceSplit(rng.uniform_int(1, max_part), rng.uniform_int(1, max_part)),
          SubspaceSplit(rng.uniform_int(1, max_part), rng.uniform_int(1, max_part))};
}

KrausChannel make_random(SLTag tag, const ChannelShape& s, Rng& rng) {
  switch (tag) {
    case SLTag::C1: return make_lsp(random_lsp_params(s, rng), s);
    case SLTag::C2: return make_c2(random_swap_params(s, rng), s);
    case SLTag::C3: return make_c3(random_absorb_params(s, AbsorbVariant::C3, rng), s);
    case SLTag::C4: return make_c4(random_absorb_params(s, AbsorbVariant::C4, rng), s);
    default: break;
  }
  throw std::logic_error("no generator");
}

// Phi(Q) = ||T|| Tr(Q) rho on the full target, rho supported where given.
KrausChannel constant_channel(const SubspaceSplit& src, const ComplexMatrix& rho_full,
                              const SubspaceSplit& tgt) {
  const std::size_t ds = src.total(), dt = tgt.total();
  const ComplexMatrix c = oracle::choi_by_units(
      [&](const ComplexMatrix& q) { return q.trace() * rho_full; }, ds, dt);
  return kraus_from_choi(ChoiMatrix(Space(src), Space(tgt), c));
}

ComplexMatrix padded(const ComplexMatrix& m, std::size_t rows, std::size_t cols,
                     std::size_t r0, std::size_t c0) {
  ComplexMatrix out(rows, cols);
  out.set_block(r0, c0, m);
  return out;
}

const ComplexMatrix kSwapX = ComplexMatrix::from_rows({{0, 1}, {1, 0}});

}  // namespace

TEST_CASE("make_lsp examples") {
  const ChannelShape sh{SubspaceSplit(2, 3), SubspaceSplit(2, 3)};
  SUBCASE("identity family") {
    const LspParams p{{ComplexMatrix::identity(2)}, {ComplexMatrix::identity(3)}, {1.0}, {1.0}};
    CHECK(channel_distance(make_lsp(p, sh), identity_channel(Space(sh.source))) <= 1e-12);
  }
  SUBCASE("zero coefficients annihilate the cross blocks") {
    const LspParams p{{ComplexMatrix::identity(2)}, {ComplexMatrix::identity(3)}, {0.0}, {0.0}};
    const KrausChannel ch = make_lsp(p, sh);
    Rng rng(Seed{11});
    const ComplexMatrix q = random_density(5, 5, rng);
    const ComplexMatrix out = apply(ch, q);
    ComplexMatrix expect = q;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 2; j < 5; ++j) expect(i, j) = expect(j, i) = 0.0;
    CHECK(oracle::max_diff(out, expect) <= 1e-12);
  }
  SUBCASE("random (3,3)->(2,4) matches the second-quantized restriction") {
    Rng rng(Seed{12});
    const ChannelShape s{SubspaceSplit(3, 3), SubspaceSplit(2, 4)};
    for (int i = 0; i < 5; ++i) {
      const LspParams p = random_lsp_params(s, rng);
      const KrausChannel ch = make_lsp(p, s);
      CHECK(is_tp(ch));
      CHECK(channel_distance(ch, one_restriction(tensor(lift_lsp(p, s)), build_embeddings(s))) <= 1e-9);
    }
  }
  SUBCASE("invalid parameters") {
    LspParams p{{ComplexMatrix::identity(2)}, {ComplexMatrix::identity(3)}, {1.2}, {1.0}};
    CHECK_THROWS_AS(make_lsp(p, sh), DomainError);
    p.c1 = {1.0};
    p.kraus1 = {0.5 * ComplexMatrix::identity(2)};
    CHECK_THROWS_AS(make_lsp(p, sh), DomainError);
    // Linearly dependent family.
    const ComplexMatrix h = std::sqrt(0.5) * ComplexMatrix::identity(2);
    p.kraus1 = {h, h};
    p.c1 = {0.0, 0.0};
    CHECK_THROWS_AS(make_lsp(p, sh), DomainError);
  }
  SUBCASE("Kraus-level formula") {
    Rng rng(Seed{13});
    const ChannelShape s{SubspaceSplit(2, 2), SubspaceSplit(3, 1)};
    const LspParams p = random_lsp_params(s, rng);
    const std::size_t ds = 4, dt = 4;
    auto pad1 = [&](const ComplexMatrix& m) { return padded(m, dt, ds, 0, 0); };
    auto pad2 = [&](const ComplexMatrix& m) { return padded(m, dt, ds, 3, 2); };
    const ComplexMatrix v = pad1(lsp_v(p)), w = pad2(lsp_w(p));
    const ComplexMatrix q = random_ginibre(ds, ds, rng);
    ComplexMatrix expect(dt, dt);
    for (const auto& k : p.kraus1) expect += oracle::matmul(oracle::matmul(pad1(k), q), oracle::dagger(pad1(k)));
    for (const auto& k : p.kraus2) expect += oracle::matmul(oracle::matmul(pad2(k), q), oracle::dagger(pad2(k)));
    expect += oracle::matmul(oracle::matmul(v, q), oracle::dagger(w));
    expect += oracle::matmul(oracle::matmul(w, q), oracle::dagger(v));
    CHECK(oracle::max_diff(apply(make_lsp(p, s), q), expect) <= 1e-12);
  }
}

TEST_CASE("make_c2 examples") {
  const ChannelShape sh{SubspaceSplit(1, 1), SubspaceSplit(1, 1)};
  const ComplexMatrix one = ComplexMatrix::identity(1);
  SUBCASE("swap unitary") {
    const KrausChannel ch = make_c2({one, one, one, one}, sh);
    CHECK(channel_distance(ch, unitary_channel(Space(sh.source), kSwapX)) <= 1e-12);
  }
  SUBCASE("no coherence") {
    const ChannelShape s{SubspaceSplit(2, 3), SubspaceSplit(2, 2)};
    Rng rng(Seed{14});
    const ComplexMatrix r1 = random_density(2, 2, rng), r2 = random_density(2, 1, rng);
    const KrausChannel ch = make_c2({r1, r2, ComplexMatrix(2, 2), ComplexMatrix(1, 3)}, s);
    const ComplexMatrix q = random_density(5, 5, rng);
    ComplexMatrix expect(4, 4);
    cplx tr1 = 0.0, tr2 = 0.0;
    for (std::size_t i = 0; i < 2; ++i) tr1 += q(i, i);
    for (std::size_t i = 2; i < 5; ++i) tr2 += q(i, i);
    expect.set_block(0, 0, tr2 * r1);
    expect.set_block(2, 2, tr1 * r2);
    CHECK(oracle::max_diff(apply(ch, q), expect) <= 1e-12);
  }
  SUBCASE("random params match the second-quantized restriction") {
    Rng rng(Seed{15});
    for (int i = 0; i < 10; ++i) {
      const ChannelShape s = draw_shape(rng);
      const SwapParams p = random_swap_params(s, rng);
      CHECK(channel_distance(make_c2(p, s), one_restriction(tensor(lift_c2(p, s)), build_embeddings(s))) <= 1e-9);
    }
  }
  SUBCASE("C outside the unit ball") {
    CHECK_THROWS_AS(make_c2({one, one, 1.5 * one, one}, sh), DomainError);
  }
}

TEST_CASE("make_c3 and make_c4 examples") {
  Rng rng(Seed{16});
  SUBCASE("C4 with identity inner resets s2 into rho") {
    const ChannelShape s{SubspaceSplit(2, 2), SubspaceSplit(2, 1)};
    const ComplexMatrix rho = random_density(2, 2, rng);
    const KrausChannel ch = make_c4({rho, identity_channel(Space(2))}, s);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) {
        ComplexMatrix e(4, 4);
        e(a, b) = 1.0;
        CHECK(oracle::max_diff(apply(ch, e), padded(e.block(0, 0, 2, 2), 3, 3, 0, 0)) <= 1e-12);
      }
    for (std::size_t a = 2; a < 4; ++a) {
      ComplexMatrix e(4, 4);
      e(a, a) = 1.0;
      CHECK(oracle::max_diff(apply(ch, e), padded(rho, 3, 3, 0, 0)) <= 1e-12);
    }
  }
  SUBCASE("C3 sends all weight to t2") {
    const ChannelShape s{SubspaceSplit(2, 3), SubspaceSplit(3, 2)};
    const AbsorbParams p{random_density(2, 2, rng),
                         random_channel(Space(3), Space(2), 3, rng)};
    const KrausChannel ch = make_c3(p, s);
    for (int i = 0; i < 10; ++i) {
      const ComplexMatrix q = random_ginibre(5, 5, rng);
      const ComplexMatrix out = apply(ch, q);
      CHECK(std::abs(out.block(3, 3, 2, 2).trace() - q.trace()) <= 1e-11);
    }
  }
  SUBCASE("random params match the second-quantized restriction") {
    for (int i = 0; i < 10; ++i) {
      const ChannelShape s = draw_shape(rng);
      const AbsorbParams p3 = random_absorb_params(s, AbsorbVariant::C3, rng);
      const AbsorbParams p4 = random_absorb_params(s, AbsorbVariant::C4, rng);
      const EmbeddingSet e = build_embeddings(s);
      CHECK(channel_distance(make_c3(p3, s), one_restriction(tensor(lift_c34(p3, s, AbsorbVariant::C3)), e)) <= 1e-9);
      CHECK(channel_distance(make_c4(p4, s), one_restriction(tensor(lift_c34(p4, s, AbsorbVariant::C4)), e)) <= 1e-9);
    }
  }
  SUBCASE("inner channel with the wrong shape") {
    const ChannelShape s{SubspaceSplit(2, 3), SubspaceSplit(3, 2)};
    CHECK_THROWS(make_c3({random_density(2, 1, rng), identity_channel(Space(3))}, s));
  }
}

TEST_CASE("transfer_signature examples") {
  const TransferSignature id = transfer_signature(identity_channel(Space(SubspaceSplit(2, 2))));
  CHECK(id.w[0][0] == doctest::Approx(1.0));
  CHECK(id.w[0][1] == doctest::Approx(0.0));
  CHECK(id.w[1][0] == doctest::Approx(0.0));
  CHECK(id.w[1][1] == doctest::Approx(1.0));
  CHECK(id.deviation[0] <= 1e-12);

  const TransferSignature sw = transfer_signature(unitary_channel(Space(SubspaceSplit(1, 1)), kSwapX));
  CHECK(sw.w[0][1] == doctest::Approx(1.0));
  CHECK(sw.w[1][0] == doctest::Approx(1.0));
  CHECK(sw.deviation[1] <= 1e-12);

  Rng rng(Seed{17});
  const ComplexMatrix rho = padded(random_density(2, 2, rng), 5, 5, 0, 0);
  const TransferSignature reset =
      transfer_signature(constant_channel(SubspaceSplit(2, 2), rho, SubspaceSplit(2, 3)));
  CHECK(reset.w[0][0] == doctest::Approx(1.0));
  CHECK(reset.w[1][0] == doctest::Approx(1.0));
  CHECK(reset.w[0][1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(reset.deviation[3] <= 1e-12);

  const KrausChannel lossy(Space(SubspaceSplit(1, 1)), Space(SubspaceSplit(1, 1)),
                           {0.5 * ComplexMatrix::identity(2)});
  CHECK_THROWS_AS(transfer_signature(lossy), DomainError);
}

TEST_CASE("signature rows sum to one and exactly one pattern matches") {
  Rng rng(Seed{18});
  for (int i = 0; i < 40; ++i) {
    const ChannelShape s = (i < 4) ? ChannelShape{SubspaceSplit(1, 1), SubspaceSplit(1, 1)}
                                   : draw_shape(rng);
    for (SLTag tag : kTags) {
      const TransferSignature sig = transfer_signature(make_random(tag, s, rng));
      for (const auto& row : sig.w) CHECK(row[0] + row[1] == doctest::Approx(1.0).epsilon(1e-12));
      int matches = 0;
      for (double d : sig.deviation) matches += d <= 1e-7 ? 1 : 0;
      CHECK(matches == 1);
      CHECK(sig.deviation[static_cast<int>(tag)] <= 1e-10);
    }
  }
}

TEST_CASE("is_sp") {
  CHECK(is_sp(identity_channel(Space(SubspaceSplit(2, 2)))));
  CHECK_FALSE(is_sp(unitary_channel(Space(SubspaceSplit(1, 1)), kSwapX)));
  Rng rng(Seed{19});
  int lsp_sp = 0;
  for (int i = 0; i < 100; ++i) {
    const ChannelShape s = draw_shape(rng);
    lsp_sp += is_sp(make_random(SLTag::C1, s, rng)) ? 1 : 0;
    CHECK_FALSE(is_sp(make_random(kTags[1 + i % 3], s, rng)));
  }
  CHECK(lsp_sp == 100);
}

TEST_CASE("classify examples") {
  SUBCASE("identity is C1 with unit coefficients") {
    const SLClass cls = classify(identity_channel(Space(SubspaceSplit(2, 2))));
    REQUIRE(cls.tag == SLTag::C1);
    const auto& p = std::get<LspParams>(cls.params);
    REQUIRE(p.kraus1.size() == 1);
    REQUIRE(p.kraus2.size() == 1);
    CHECK(std::abs(std::abs(p.c1[0]) - 1.0) <= 1e-9);
    CHECK(std::abs(std::abs(p.c2[0]) - 1.0) <= 1e-9);
    const ComplexMatrix g = oracle::matmul(oracle::dagger(p.kraus1[0]), p.kraus1[0]);
    CHECK(oracle::identity_residual(g) <= 1e-12);
    CHECK(cls.diagnostics.rebuild_distance <= 1e-9);
  }
  SUBCASE("swap unitary is C2") {
    const SLClass cls = classify(unitary_channel(Space(SubspaceSplit(1, 1)), kSwapX));
    CHECK(cls.tag == SLTag::C2);
    CHECK(cls.diagnostics.rebuild_distance <= 1e-9);
  }
  SUBCASE("generic random channel is NotSL") {
    Rng rng(Seed{20});
    for (int i = 0; i < 10; ++i) {
      const ChannelShape s = draw_shape(rng);
      const SLClass cls = classify(random_channel(s, 4, Seed{100 + static_cast<std::uint64_t>(i)}));
      CHECK(cls.tag == SLTag::NotSL);
      double best = 1.0;
      for (double d : cls.diagnostics.signature.deviation) best = std::min(best, d);
      CHECK(best > 1e-4);
    }
  }
  SUBCASE("non-channel input") {
    const KrausChannel lossy(Space(SubspaceSplit(1, 1)), Space(SubspaceSplit(1, 1)),
                             {0.5 * ComplexMatrix::identity(2)});
    CHECK_THROWS_AS(classify(lossy), DomainError);
  }
}

TEST_CASE("generator and classifier closure") {
  Rng rng(Seed{21});
  for (int i = 0; i < 40; ++i) {
    const ChannelShape s = draw_shape(rng);
    for (SLTag tag : kTags) {
      const KrausChannel ch = make_random(tag, s, rng);
      const SLClass cls = classify(ch);
      CHECK(cls.tag == tag);
      CHECK(cls.diagnostics.rebuild_distance <= 1e-9);
      CHECK(channel_distance(rebuild(cls, s), ch) <= 1e-9);
    }
  }
}

TEST_CASE("SP channel with a rank-2 cross block is not SL") {
  const SubspaceSplit sp(2, 2);
  std::vector<ComplexMatrix> v, w;
  for (std::size_t i = 0; i < 2; ++i) {
    v.push_back(padded(ComplexMatrix::basis(2, i) * ComplexMatrix::basis(2, i).adjoint(), 4, 4, 0, 0));
    w.push_back(padded(ComplexMatrix::basis(2, i) * ComplexMatrix::basis(2, i).adjoint(), 4, 4, 2, 2));
  }
  const double kdiag[2] = {0.9, 0.7};
  auto phi = [&](const ComplexMatrix& q) {
    ComplexMatrix out(4, 4);
    for (std::size_t n = 0; n < 2; ++n) {
      out += oracle::matmul(oracle::matmul(v[n], q), oracle::dagger(v[n]));
      out += oracle::matmul(oracle::matmul(w[n], q), oracle::dagger(w[n]));
      const ComplexMatrix x = kdiag[n] * oracle::matmul(oracle::matmul(v[n], q), oracle::dagger(w[n]));
      out += x;
      out += kdiag[n] * oracle::matmul(oracle::matmul(w[n], q), oracle::dagger(v[n]));
    }
    return out;
  };
  const ComplexMatrix c = oracle::choi_by_units(phi, 4, 4);
  REQUIRE(is_psd(c));
  const KrausChannel ch = kraus_from_choi(ChoiMatrix(Space(sp), Space(sp), c));
  REQUIRE(is_tp(ch));
  CHECK(is_sp(ch));
  const SLClass cls = classify(ch);
  CHECK(cls.tag == SLTag::NotSL);
  CHECK(cls.diagnostics.cross_sigma_ratio == doctest::Approx(0.7 / 0.9).epsilon(1e-9));
}

TEST_CASE("compose_class table") {
  CHECK(compose_class(SLTag::C1, SLTag::C2) == SLTag::C2);
  CHECK(compose_class(SLTag::C2, SLTag::C2) == SLTag::C1);
  CHECK(compose_class(SLTag::C3, SLTag::C2) == SLTag::C3);
  CHECK(compose_class(SLTag::C2, SLTag::C1) == SLTag::C2);
  CHECK(compose_class(SLTag::C2, SLTag::C3) == SLTag::C4);
  CHECK(compose_class(SLTag::C2, SLTag::C4) == SLTag::C3);
  for (SLTag t : kTags) {
    CHECK(compose_class(SLTag::C1, t) == t);
    CHECK(compose_class(t, SLTag::C1) == t);
    CHECK(compose_class(SLTag::C3, t) == SLTag::C3);
    CHECK(compose_class(SLTag::C4, t) == SLTag::C4);
  }
  CHECK_THROWS_AS(compose_class(SLTag::NotSL, SLTag::C1), DomainError);
  CHECK_THROWS_AS(compose_class(SLTag::C1, SLTag::NotSL), DomainError);
}

TEST_CASE("compositions of generated channels follow the table") {
  Rng rng(Seed{22});
  for (SLTag outer : kTags)
    for (SLTag inner : kTags)
      for (int i = 0; i < 5; ++i) {
        const SubspaceSplit a(rng.uniform_int(1, 3), rng.uniform_int(1, 3));
        const SubspaceSplit m(rng.uniform_int(1, 3), rng.uniform_int(1, 3));
        const SubspaceSplit b(rng.uniform_int(1, 3), rng.uniform_int(1, 3));
        const KrausChannel first = make_random(inner, {a, m}, rng);
        const KrausChannel second = make_random(outer, {m, b}, rng);
        const SLClass cls = classify(compose(second, first, true));
        CHECK(cls.tag == compose_class(outer, inner));
      }
}

TEST_CASE("dilation") {
  const SubspaceSplit sp(2, 3);
  Rng rng(Seed{23});
  SUBCASE("unitary blocks give a block unitary") {
    const ComplexMatrix u1 = random_unitary(2, rng), u2 = random_unitary(3, rng);
    const LspParams p{{u1}, {u2}, {1.0}, {1.0}};
    const DilationResult d = dilate_lsp(p, sp);
    CHECK(d.dim_a1 == 1);
    CHECK(d.dim_a2 == 1);
    ComplexMatrix block(5, 5);
    block.set_block(0, 0, u1);
    block.set_block(2, 2, u2);
    CHECK(oracle::max_diff(d.u, block) <= 1e-12);
    CHECK(d.reproduction_distance <= 1e-12);
  }
  SUBCASE("dephasing-style family") {
    std::vector<ComplexMatrix> deph;
    for (std::size_t i = 0; i < 2; ++i)
      deph.push_back(ComplexMatrix::basis(2, i) * ComplexMatrix::basis(2, i).adjoint());
    const LspParams p{deph, {ComplexMatrix::identity(3)}, {0.0, 0.0}, {0.0}};
    for (const DilationResult& d : {dilate_lsp(p, sp), dilate_lsp_exact(p, sp)}) {
      CHECK(unitarity_residual(d.u) <= 1e-10);
      CHECK(block_unitarity_residual(d) <= 1e-10);
      // Reproduction by an explicit trace over the ancillas.
      const std::size_t anc = d.dim_a1 * d.dim_a2;
      const ComplexMatrix a = kron(ComplexMatrix::column(d.a1), ComplexMatrix::column(d.a2));
      const ComplexMatrix q = random_density(5, 5, rng);
      const ComplexMatrix in = kron(q, oracle::matmul(a, oracle::dagger(a)));
      const ComplexMatrix out = partial_trace(oracle::matmul(oracle::matmul(d.u, in), oracle::dagger(d.u)), 5, anc, Factor::B);
      CHECK(oracle::max_diff(out, apply(dilated_channel(d), q)) <= 1e-12);
    }
    const DilationResult exact = dilate_lsp_exact(p, sp);
    CHECK(channel_distance(dilated_channel(exact), make_lsp(p, {sp, sp})) <= 1e-9);
    const DilationResult plain = dilate_lsp(p, sp);
    CHECK(channel_distance(dilated_channel(plain), make_lsp(absorbed_params(p), {sp, sp})) <= 1e-9);
  }
  SUBCASE("random draws") {
    for (int i = 0; i < 30; ++i) {
      const SubspaceSplit s(rng.uniform_int(1, 3), rng.uniform_int(1, 3));
      const LspParams p = random_lsp_params({s, s}, rng);
      const DilationResult d = dilate_lsp_exact(p, s);
      CHECK(block_unitarity_residual(d) <= 1e-10);
      CHECK(unitarity_residual(d.u) <= 1e-10);
      CHECK(d.reproduction_distance <= 1e-9);
      CHECK(classify(dilated_channel(d)).tag == SLTag::C1);
      CHECK(classify(dilated_channel(dilate_lsp(p, s))).tag == SLTag::C1);
    }
  }
  SUBCASE("split mismatch") {
    const LspParams p = random_lsp_params({sp, SubspaceSplit(3, 2)}, rng);
    CHECK_THROWS_AS(dilate_lsp(p, sp), DomainError);
  }
}

TEST_CASE("decompose_lsp") {
  Rng rng(Seed{24});
  SUBCASE("identity parameters") {
    const SubspaceSplit sp(2, 2);
    const LspParams p{{ComplexMatrix::identity(2)}, {ComplexMatrix::identity(2)}, {1.0}, {1.0}};
    const LspDecomposition dec = decompose_lsp(p, {sp, sp});
    CHECK(channel_distance(dec.phi_a, identity_channel(Space(sp))) <= 1e-12);
    CHECK(channel_distance(dec.phi_b, identity_channel(Space(sp))) <= 1e-12);
  }
  for (int i = 0; i < 30; ++i) {
    const ChannelShape s = draw_shape(rng);
    const LspParams p = random_lsp_params(s, rng);
    const LspDecomposition dec = decompose_lsp(p, s);
    CHECK(is_tp(dec.phi_a));
    CHECK(is_tp(dec.phi_b));
    CHECK(channel_distance(compose(dec.phi_b, dec.phi_a), make_lsp(p, s)) <= 1e-10);
    const std::size_t ds2 = s.source.dim2(), dt1 = s.target.dim1();
    CHECK(channel_distance(restrict_target(restrict_source(dec.phi_a, 2), 2),
                           identity_channel(Space(ds2))) <= 1e-10);
    CHECK(channel_distance(restrict_target(restrict_source(dec.phi_b, 1), 1),
                           identity_channel(Space(dt1))) <= 1e-10);
  }
}

TEST_CASE("Hamiltonian demo") {
  const ChannelShape s{SubspaceSplit(2, 2), SubspaceSplit(2, 2)};
  Rng rng(Seed{25});
  const ComplexMatrix rho_t = padded(random_density(2, 2, rng), 4, 4, 0, 0);
  SUBCASE("no interaction gives the constant channel") {
    const ComplexMatrix z(4, 4);
    const KrausChannel ch = hamiltonian_demo(z, z, rho_t, 1.0, s);
    CHECK(channel_distance(ch, constant_channel(s.source, rho_t, s.target)) <= 1e-12);
    const SLClass cls = classify(ch);
    REQUIRE(cls.tag == SLTag::C4);
    const auto& inner = std::get<AbsorbParams>(cls.params).inner;
    const ComplexMatrix q = random_density(2, 2, rng);
    CHECK(oracle::max_diff(apply(inner, q), rho_t.block(0, 0, 2, 2)) <= 1e-9);
  }
  SUBCASE("random Hermitian couplings") {
    for (double t : {0.3, 1.7, 4.0}) {
      const ComplexMatrix h1 = random_hermitian(4, rng), h2 = random_hermitian(4, rng);
      const ComplexMatrix h = interaction_hamiltonian(h1, h2, s);
      CHECK(unitarity_residual(expm_hermitian(h, t)) <= 1e-10);
      const SLClass cls = classify(hamiltonian_demo(h1, h2, rho_t, t, s));
      CHECK(cls.tag == SLTag::C4);
      CHECK(cls.diagnostics.rebuild_distance <= 1e-9);
    }
  }
  SUBCASE("target state outside t1") {
    const ComplexMatrix bad = padded(random_density(2, 2, rng), 4, 4, 2, 2);
    const ComplexMatrix z(4, 4);
    CHECK_THROWS_AS(hamiltonian_demo(z, z, bad, 1.0, s), DomainError);
  }
}
