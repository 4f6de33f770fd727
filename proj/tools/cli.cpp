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

#include "cli.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sublocal/io.hpp"
#include "sublocal/sublocal.hpp"

namespace sublocal::cli {

namespace {

using io::json;

// Distance above which verify --against reports a mismatch.
constexpr double kAgainstTolerance = 1e-9;

ChannelShape shape_from_dims(const std::vector<std::size_t>& d) {
  if (d.size() != 4) throw ParseError("--dims needs ds1,ds2,dt1,dt2");
  for (std::size_t v : d)
    if (v < 1) throw ParseError("--dims entries must be positive");
  return {SubspaceSplit(d[0], d[1]), SubspaceSplit(d[2], d[3])};
}

json signature_json(const TransferSignature& s) {
  return {{"w", {{s.w[0][0], s.w[0][1]}, {s.w[1][0], s.w[1][1]}}},
          {"deviation",
           {{"C1", s.deviation[0]}, {"C2", s.deviation[1]},
            {"C3", s.deviation[2]}, {"C4", s.deviation[3]}}}};
}

json class_json(const SLClass& c) {
  const SLDiagnostics& d = c.diagnostics;
  json diag = {{"block_leakage", d.block_leakage},
               {"cross_sigma_ratio", d.cross_sigma_ratio},
               {"range_residual", d.range_residual},
               {"norm_product", d.norm_product}};
  if (d.rebuild_distance >= 0.0) diag["rebuild_distance"] = d.rebuild_distance;
  if (!d.note.empty()) diag["note"] = d.note;
  json out = {{"tag", to_string(c.tag)}, {"diagnostics", diag}};
  if (c.tag != SLTag::NotSL) out["params"] = io::params_to_json(c.params);
  return out;
}

struct Report {
  json body;
  bool channel = false;
  std::optional<SLClass> cls;
};

Report make_report(const KrausChannel& ch, double tol, bool with_class) {
  const Tolerance t(tol);
  const ChannelReport r = verify_channel(ch, t);
  Report rep;
  rep.channel = r.tp && r.cp;
  rep.body["tp"] = {{"ok", r.tp}, {"residual", r.tp_residual}};
  rep.body["cp"] = {{"ok", r.cp}, {"min_eigenvalue", r.min_eigenvalue}};
  const double sp = sp_residual(ch);
  rep.body["sp"] = {{"ok", sp <= tol}, {"residual", sp}};
  if (!r.tp) return rep;
  rep.body["signature"] = signature_json(transfer_signature(ch, t));
  if (with_class && rep.channel) {
    ClassifierTolerances ct;
    ct.kernel = tol;
    rep.cls = classify(ch, ct);
    rep.body["class"] = class_json(*rep.cls);
  }
  return rep;
}

KrausChannel generate(const std::string& cls, const ChannelShape& shape,
                      std::size_t kraus, Rng& rng, json& params) {
  if (cls == "c1") {
    const LspParams p = random_lsp_params(shape, rng);
    params = io::to_json(p);
    return make_lsp(p, shape);
  }
  if (cls == "c2") {
    const SwapParams p = random_swap_params(shape, rng);
    params = io::to_json(p);
    return make_c2(p, shape);
  }
  if (cls == "c3" || cls == "c4") {
    const auto v = cls == "c3" ? AbsorbVariant::C3 : AbsorbVariant::C4;
    const AbsorbParams p = random_absorb_params(shape, v, rng);
    params = io::to_json(p);
    params["class"] = cls == "c3" ? "C3" : "C4";
    return make_absorb(p, shape, v);
  }
  params = {{"class", "random"}, {"kraus_count", kraus}};
  return random_channel(Space(shape.source), Space(shape.target), kraus, rng);
}

ProductChannelPair lift_class(const SLClass& c, const ChannelShape& shape) {
  switch (c.tag) {
    case SLTag::C1: return lift_lsp(std::get<LspParams>(c.params), shape);
    case SLTag::C2: return lift_c2(std::get<SwapParams>(c.params), shape);
    case SLTag::C3:
      return lift_c34(std::get<AbsorbParams>(c.params), shape, AbsorbVariant::C3);
    case SLTag::C4:
      return lift_c34(std::get<AbsorbParams>(c.params), shape, AbsorbVariant::C4);
    case SLTag::NotSL: break;
  }
  throw DomainError("channel is not subspace local");
}

ComplexMatrix embedded_density(const ChannelShape& shape, Rng& rng) {
  const std::size_t d1 = shape.target.dim1();
  const ComplexMatrix r = random_density(d1, rng.uniform_int(1, d1), rng);
  ComplexMatrix out(shape.target.total(), shape.target.total());
  out.set_block(0, 0, r);
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subspace-local quantum channel toolkit"};
  app.require_subcommand(1);

  std::string gen_class = "random";
  std::vector<std::size_t> dims;
  std::uint64_t seed = 0;
  std::size_t kraus = 4;
  std::string out_path;
  std::string rep_name = "kraus";
  auto* gen = app.add_subcommand("gen", "Generate a channel");
  gen->add_option("--class", gen_class, "c1, c2, c3, c4 or random")
      ->check(CLI::IsMember({"c1", "c2", "c3", "c4", "random"}));
  gen->add_option("--dims", dims, "ds1,ds2,dt1,dt2")->delimiter(',')->expected(4)->required();
  gen->add_option("--seed", seed);
  gen->add_option("--kraus", kraus, "Kraus count for --class random")
      ->check(CLI::PositiveNumber);
  gen->add_option("--representation", rep_name)->check(CLI::IsMember({"kraus", "choi"}));
  gen->add_option("--out", out_path)->required();

  std::string in_path;
  std::string against_path;
  double tol = Tolerance::kDefault;
  auto* verify = app.add_subcommand("verify", "Check trace preservation and positivity");
  verify->add_option("file", in_path)->required();
  verify->add_option("--tol", tol)->check(CLI::PositiveNumber);
  verify->add_option("--against", against_path, "Report the distance to another channel");

  auto* cls_cmd = app.add_subcommand("classify", "Determine the subspace-local class");
  cls_cmd->add_option("file", in_path)->required();
  cls_cmd->add_option("--tol", tol)->check(CLI::PositiveNumber);

  std::string second_path;
  auto* comp = app.add_subcommand("compose", "Apply A then B");
  comp->add_option("a", in_path)->required();
  comp->add_option("b", second_path)->required();
  comp->add_option("--out", out_path)->required();

  auto* dil = app.add_subcommand("dilate", "Unitary dilation of an LSP channel");
  dil->add_option("file", in_path)->required();
  dil->add_option("--out", out_path)->required();

  auto* lift = app.add_subcommand("lift", "Product channel pair on F01 spaces");
  lift->add_option("file", in_path)->required();
  lift->add_option("--out", out_path)->required();

  auto* restr = app.add_subcommand("restrict", "1-restriction of a lifted pair");
  restr->add_option("file", in_path)->required();
  restr->add_option("--out", out_path)->required();

  double time = 1.0;
  auto* demo = app.add_subcommand("demo", "Channel induced by a local interaction Hamiltonian");
  demo->add_option("--dims", dims, "ds1,ds2,dt1,dt2")->delimiter(',')->expected(4)->required();
  demo->add_option("--seed", seed);
  demo->add_option("--time", time);
  demo->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kIoOrParse;
  }

  try {
    if (gen->parsed()) {
      const ChannelShape shape = shape_from_dims(dims);
      Rng rng{Seed{seed}};
      json params;
      const KrausChannel ch = generate(gen_class, shape, kraus, rng, params);
      const json meta = {{"seed", seed}, {"class", gen_class}, {"generator_params", params}};
      const auto rep = rep_name == "choi" ? io::Representation::Choi : io::Representation::Kraus;
      io::write_file(out_path, io::channel_to_json(ch, rep, meta));
      out << json{{"written", out_path}, {"kraus_count", ch.count()}}.dump(2) << '\n';
      return kOk;
    }
    if (verify->parsed()) {
      const KrausChannel ch = io::channel_from_json(io::read_file(in_path)).channel;
      Report rep = make_report(ch, tol, false);
      bool ok = rep.channel;
      if (!against_path.empty()) {
        const KrausChannel other = io::channel_from_json(io::read_file(against_path)).channel;
        const double d = channel_distance(ch, other);
        rep.body["against"] = {{"file", against_path}, {"distance", d},
                               {"ok", d <= kAgainstTolerance}};
        ok = ok && d <= kAgainstTolerance;
      }
      out << rep.body.dump(2) << '\n';
      if (!ok) err << "verification failed\n";
      return ok ? kOk : kNotSlOrFailed;
    }
    if (cls_cmd->parsed()) {
      const KrausChannel ch = io::channel_from_json(io::read_file(in_path)).channel;
      const Report rep = make_report(ch, tol, true);
      if (!rep.channel) {
        out << rep.body.dump(2) << '\n';
        err << "input is not a channel\n";
        return kDomain;
      }
      out << rep.body.dump(2) << '\n';
      return rep.cls->tag == SLTag::NotSL ? kNotSlOrFailed : kOk;
    }
    if (comp->parsed()) {
      const KrausChannel a = io::channel_from_json(io::read_file(in_path)).channel;
      const KrausChannel b = io::channel_from_json(io::read_file(second_path)).channel;
      if (!(a.target() == b.source())) {
        throw ShapeError("target split of A does not match source split of B");
      }
      const KrausChannel c = compose(b, a, true);
      io::write_file(out_path, io::channel_to_json(c, io::Representation::Kraus,
                                                   {{"composed", {in_path, second_path}}}));
      out << json{{"written", out_path}, {"kraus_count", c.count()}}.dump(2) << '\n';
      return kOk;
    }
    if (dil->parsed()) {
      const KrausChannel ch = io::channel_from_json(io::read_file(in_path)).channel;
      const ChannelShape shape = ch.shape();
      if (!(shape.source == shape.target)) {
        throw DomainError("dilation needs identical source and target splits");
      }
      const SLClass c = classify(ch);
      if (c.tag != SLTag::C1) {
        throw DomainError(std::string("dilation needs an LSP (C1) channel, got ") +
                          to_string(c.tag));
      }
      const DilationResult d = dilate_lsp_exact(std::get<LspParams>(c.params), shape.source);
      const double dist = channel_distance(dilated_channel(d), ch);
      json bundle = io::to_json(d);
      bundle["input_distance"] = dist;
      io::write_file(out_path, bundle);
      out << json{{"written", out_path}, {"dim_a1", d.dim_a1}, {"dim_a2", d.dim_a2},
                  {"unitarity_residual", unitarity_residual(d.u)},
                  {"input_distance", dist}}.dump(2) << '\n';
      return kOk;
    }
    if (lift->parsed()) {
      const KrausChannel ch = io::channel_from_json(io::read_file(in_path)).channel;
      const SLClass c = classify(ch);
      if (c.tag == SLTag::NotSL) {
        out << json{{"class", class_json(c)}}.dump(2) << '\n';
        err << "channel is not subspace local; no lift exists\n";
        return kNotSlOrFailed;
      }
      const ChannelShape shape = ch.shape();
      io::write_file(out_path, io::pair_to_json(lift_class(c, shape), shape));
      out << json{{"written", out_path}, {"class", to_string(c.tag)}}.dump(2) << '\n';
      return kOk;
    }
    if (restr->parsed()) {
      const auto [pair, shape] = io::pair_from_json(io::read_file(in_path));
      const KrausChannel full = tensor(pair);
      const KrausChannel ch = canonicalize(one_restriction(full, build_embeddings(shape)));
      const bool respects = respects_n_states(full, shape, 1);
      io::write_file(out_path, io::channel_to_json(ch));
      out << json{{"written", out_path}, {"respects_1_states", respects},
                  {"tp", is_tp(ch)}}.dump(2) << '\n';
      return kOk;
    }
    if (demo->parsed()) {
      const ChannelShape shape = shape_from_dims(dims);
      Rng rng{Seed{seed}};
      const ComplexMatrix h1 = random_hermitian(shape.source.dim1() * shape.target.dim1(), rng);
      const ComplexMatrix h2 = random_hermitian(shape.source.dim2() * shape.target.dim2(), rng);
      const ComplexMatrix rho = embedded_density(shape, rng);
      const KrausChannel ch = hamiltonian_demo(h1, h2, rho, time, shape);
      const SLClass c = classify(ch);
      const json meta = {{"seed", seed}, {"time", time}, {"class", to_string(c.tag)}};
      io::write_file(out_path, io::channel_to_json(ch, io::Representation::Kraus, meta));
      out << json{{"written", out_path}, {"class", to_string(c.tag)}}.dump(2) << '\n';
      return kOk;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoOrParse;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kIoOrParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kIoOrParse;
}

}  // namespace sublocal::cli
