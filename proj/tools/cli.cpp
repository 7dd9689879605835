// Copyright 2026 The Suzuki Groups Authors
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

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "suzuki/bruhat.hpp"
#include "suzuki/enumerate.hpp"
#include "suzuki/error.hpp"
#include "suzuki/group.hpp"
#include "suzuki/serialize.hpp"
#include "suzuki/symbolic.hpp"
#include "suzuki/verify.hpp"

namespace suzuki::cli {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kMalformed = 2;

struct RingOptions {
  std::string json;
  int m = 3;
  bool dual = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--ring", json, R"(ring spec, e.g. {"kind":"gf2m","m":3})");
    cmd->add_option("--m", m, "extension degree (odd, 1..13)")->capture_default_str();
    cmd->add_flag("--dual", dual, "dual numbers over GF(2^m)");
  }

  const Ring& resolve() const {
    if (!json.empty()) return ring_from_json(Json::parse(json));
    return make_ring(dual ? RingKind::kDual : RingKind::kGF2m, m);
  }
};

Json read_json_file(const std::string& path) {
  if (path == "-") return Json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open " + path);
  return Json::parse(in);
}

// A matrix file is either a {"ring", "matrix"} document or, when --ring is
// given, a bare nested array. If both name a ring they must agree.
Mat4 load_matrix(const std::string& path, const RingOptions& ring_opts, bool ring_given) {
  const Json doc = read_json_file(path);
  if (doc.is_array()) {
    if (!ring_given) throw InvalidParameter("bare matrix needs --ring or --m");
    return matrix_from_json(ring_opts.resolve(), doc);
  }
  Mat4 g = matrix_from_document(doc);
  if (ring_given && !(g.ring() == ring_opts.resolve())) {
    throw InvalidParameter("matrix file ring " + g.ring().describe() +
                           " disagrees with the requested ring");
  }
  return g;
}

std::string poly_string(std::uint64_t p) {
  std::string out;
  for (int i = poly_degree(p); i >= 0; --i) {
    if (!((p >> i) & 1)) continue;
    if (!out.empty()) out += " + ";
    out += i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return out;
}

// Human mode keeps the document valid JSON but puts one matrix row per line.
void print_document(std::ostream& out, const Json& j, bool machine) {
  if (machine) {
    out << j.dump() << "\n";
    return;
  }
  out << "{\"ring\": " << j.at("ring").dump() << ",\n \"matrix\": [";
  const Json& rows = j.at("matrix");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << (i ? ",\n            " : "") << rows[i].dump();
  }
  out << "]}\n";
}

// ----------------------------------------------------------- subcommands

int ring_info(const Ring& r, bool machine, std::ostream& out) {
  const std::uint64_t tits_exponent = std::uint64_t{1} << ((r.m() + 1) / 2);
  Json j = {{"ring", ring_to_json(r)},
            {"describe", r.describe()},
            {"modulus", r.modulus()},
            {"size", r.size()},
            {"units", r.units().size()},
            {"tits_exponent", tits_exponent}};
  if (r.is_field()) j["group_order"] = cell_count(r.field_order());
  if (machine) {
    out << j.dump() << "\n";
    return kOk;
  }
  out << r.describe() << "\n"
      << "  modulus   " << poly_string(r.modulus()) << "\n"
      << "  elements  " << r.size() << "\n"
      << "  units     " << r.units().size() << "\n"
      << "  tits      x -> x^" << tits_exponent << " on the field\n";
  if (r.is_field()) out << "  |Sz|      " << cell_count(r.field_order()) << "\n";
  return kOk;
}

int member(const Mat4& g, bool machine, std::ostream& out) {
  const Membership m = is_member(g);
  if (machine) {
    Json j = {{"member", static_cast<bool>(m)}};
    if (!m) j["reason"] = m.describe();
    out << j.dump() << "\n";
  } else {
    out << (m ? "true" : "false: " + m.describe()) << "\n";
  }
  return m ? kOk : kNegative;
}

std::string form_line(const Ring& r, const BruhatForm& f) {
  auto e = [&r](Element x) { return element_to_json(r, x).dump(); };
  std::ostringstream os;
  if (f.cell == BruhatForm::Cell::kUnit) {
    os << "h(" << e(f.t) << ") x+(" << e(f.u2.first) << ", " << e(f.u2.second) << ")";
  } else {
    os << "x+(" << e(f.u1->first) << ", " << e(f.u1->second) << ")^-1 s h(" << e(f.t)
       << ") x+(" << e(f.u2.first) << ", " << e(f.u2.second) << ")";
  }
  return os.str();
}

int decompose_cmd(const Mat4& g, bool machine, std::ostream& out, std::ostream& err) {
  BruhatForm f;
  try {
    f = decompose(g);
  } catch (const NotAMember& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const NotAField& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  }
  const Json j = form_to_json(g.ring(), f);
  if (machine) {
    out << j.dump() << "\n";
  } else {
    out << (f.cell == BruhatForm::Cell::kBig ? "big cell: " : "unit cell: ")
        << form_line(g.ring(), f) << "\n"
        << j.dump() << "\n";
  }
  return kOk;
}

int inv_cmd(const Mat4& g, bool machine, std::ostream& out, std::ostream& err) {
  if (!is_symplectic(g)) {
    err << "error: matrix is not symplectic\n";
    return kNegative;
  }
  print_document(out, matrix_document(symplectic_inverse(g)), machine);
  return kOk;
}

struct EnumerateOptions {
  bool count_only = false;
  std::string out_path;
  std::string method = "auto";
};

int enumerate_cmd(const Ring& r, const EnumerateOptions& o, bool machine,
                  std::ostream& out, std::ostream& err) {
  if (!r.is_field()) throw NotAField("enumerate needs a field, got " + r.describe());
  if (r.field_order() > kMaxEnumerationOrder) {
    throw InvalidParameter("enumeration supports q <= 32, got " + r.describe());
  }
  const std::uint64_t expected = cell_count(r.field_order());
  std::string method = o.method;
  if (method == "auto") method = expected <= kDefaultSetLimit ? "bruhat" : "stream";

  std::uint64_t count = 0;
  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw InvalidParameter("cannot write " + o.out_path);
    spill_keys(r, file);
    file.close();
    if (!file) throw InvalidParameter("write failed for " + o.out_path);
  }
  if (method == "bruhat") {
    count = enumerate_all(r).size();
  } else if (method == "bfs") {
    const auto gens = standard_generators(r);
    count = bfs_closure(gens, kDefaultSetLimit).size();
  } else if (method == "stream") {
    const StreamCount c = count_streaming(r);
    if (!c.certified()) {
      err << "error: streaming count not certified: " << c.forms << " forms, "
          << c.members << " members, " << c.round_trips << " round trips\n";
      return kNegative;
    }
    count = c.forms;
  } else {
    throw InvalidParameter("unknown method " + method);
  }

  if (o.count_only) {
    out << count << "\n";
  } else if (machine) {
    Json j = {{"ring", ring_to_json(r)}, {"count", count}, {"method", method}};
    if (!o.out_path.empty()) {
      j["key_file"] = o.out_path;
      j["record_bytes"] = key_record_bytes(r);
    }
    out << j.dump() << "\n";
  } else {
    out << "Sz over " << r.describe() << ": " << count << " elements (" << method << ")\n";
    if (!o.out_path.empty()) {
      out << "keys written to " << o.out_path << ", " << key_record_bytes(r)
          << " bytes per record\n";
    }
  }
  return count == expected ? kOk : kNegative;
}

struct VerifyOptions {
  std::string suite;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 42;
};

int verify_cmd(const Ring& r, const VerifyOptions& o, bool machine, std::ostream& out) {
  const SuiteReport rep = run_suite(o.suite, r, o.samples, o.seed);
  if (machine) {
    out << report_to_json(rep).dump() << "\n";
  } else {
    out << "suite " << rep.suite << " on " << r.describe() << ": " << to_string(rep.status)
        << " (" << rep.cases << " cases, " << rep.failures.size() << " failures, "
        << std::fixed << std::setprecision(2) << rep.elapsed_seconds << " s)\n"
        << std::defaultfloat;
    for (const auto& [k, v] : rep.metrics) out << "  " << k << " = " << v << "\n";
    for (const auto& n : rep.notes) out << "  note: " << n << "\n";
    const std::size_t shown = std::min<std::size_t>(rep.failures.size(), 20);
    for (std::size_t i = 0; i < shown; ++i) out << "  failure: " << rep.failures[i] << "\n";
    if (shown < rep.failures.size()) {
      out << "  ... " << rep.failures.size() - shown << " more\n";
    }
  }
  return rep.status == SuiteStatus::kFail ? kNegative : kOk;
}

int prove_cmd(const std::string& identity, bool machine, std::ostream& out) {
  std::vector<symbolic::IdentityResult> results;
  std::vector<bool> supplementary;
  if (!identity.empty()) {
    const auto& c = symbolic::find_identity(identity);
    results.push_back(symbolic::check_identity(identity));
    supplementary.push_back(c.supplementary);
  } else {
    results = symbolic::check_all_identities();
    for (const auto& c : symbolic::identity_registry()) supplementary.push_back(c.supplementary);
  }
  bool all = true;
  Json list = Json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    all = all && results[i].holds;
    Json j = identity_result_to_json(results[i]);
    j["supplementary"] = static_cast<bool>(supplementary[i]);
    list.push_back(std::move(j));
    if (!machine) {
      out << results[i].to_string() << (supplementary[i] ? " [supplementary]" : "") << "\n";
    }
  }
  if (machine) out << Json{{"results", list}}.dump() << "\n";
  return all ? kOk : kNegative;
}

int random_cmd(const Ring& r, std::uint64_t seed, bool machine, std::ostream& out) {
  if (!r.is_field()) throw NotAField("random sampling needs a field, got " + r.describe());
  print_document(out, matrix_document(random_element(r, seed).matrix()), machine);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Suzuki groups Sz(R, tau) over characteristic-2 Tits rings", "suzuki"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  bool machine = false;
  app.add_flag("--machine", machine, "single-document JSON output");

  auto* ring_info_cmd = app.add_subcommand("ring-info", "describe a ring");
  RingOptions ring_info_ring;
  ring_info_ring.add_to(ring_info_cmd);

  auto* member_cmd = app.add_subcommand("member", "test membership in Sz");
  RingOptions member_ring;
  std::string member_path;
  member_ring.add_to(member_cmd);
  member_cmd->add_option("--matrix", member_path, "matrix file, - for stdin")->required();

  auto* decompose_sub = app.add_subcommand("decompose", "Bruhat normal form");
  RingOptions decompose_ring;
  std::string decompose_path;
  decompose_ring.add_to(decompose_sub);
  decompose_sub->add_option("--matrix", decompose_path, "matrix file, - for stdin")->required();

  auto* mul_sub = app.add_subcommand("mul", "product of two matrices");
  RingOptions mul_ring;
  std::vector<std::string> mul_paths;
  mul_ring.add_to(mul_sub);
  mul_sub->add_option("--matrix", mul_paths, "left then right factor")->required()->expected(2);

  auto* inv_sub = app.add_subcommand("inv", "inverse of a symplectic matrix");
  RingOptions inv_ring;
  std::string inv_path;
  inv_ring.add_to(inv_sub);
  inv_sub->add_option("--matrix", inv_path, "matrix file, - for stdin")->required();

  auto* enumerate_sub = app.add_subcommand("enumerate", "count or list Sz(q)");
  RingOptions enumerate_ring;
  EnumerateOptions enumerate_opts;
  enumerate_ring.add_to(enumerate_sub);
  enumerate_sub->add_flag("--count-only", enumerate_opts.count_only, "print only the count");
  enumerate_sub->add_option("--out", enumerate_opts.out_path, "write fixed-width key records");
  enumerate_sub->add_option("--method", enumerate_opts.method, "auto | bruhat | bfs | stream")
      ->check(CLI::IsMember({"auto", "bruhat", "bfs", "stream"}))
      ->capture_default_str();

  auto* verify_sub = app.add_subcommand("verify", "run a witness suite");
  RingOptions verify_ring;
  VerifyOptions verify_opts;
  verify_ring.add_to(verify_sub);
  verify_sub->add_option("--suite", verify_opts.suite, "suite name")->required();
  verify_sub->add_option("--samples", verify_opts.samples, "sampled cases")->capture_default_str();
  verify_sub->add_option("--seed", verify_opts.seed, "seed")->capture_default_str();

  auto* prove_sub = app.add_subcommand("prove", "certify identities symbolically");
  std::string identity;
  bool prove_all = false;
  auto* id_opt = prove_sub->add_option("--identity", identity, "registry name");
  prove_sub->add_flag("--all", prove_all, "every registry identity (default)")->excludes(id_opt);

  auto* random_sub = app.add_subcommand("random", "uniform random group element");
  RingOptions random_ring;
  std::uint64_t random_seed = 0;
  random_ring.add_to(random_sub);
  random_sub->add_option("--seed", random_seed, "seed")->capture_default_str();

  std::vector<const char*> argv{"suzuki"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kMalformed;
  }

  auto ring_given = [](const CLI::App* cmd) {
    return cmd->count("--ring") + cmd->count("--m") + cmd->count("--dual") > 0;
  };

  try {
    if (*ring_info_cmd) return ring_info(ring_info_ring.resolve(), machine, out);
    if (*member_cmd) {
      return member(load_matrix(member_path, member_ring, ring_given(member_cmd)), machine, out);
    }
    if (*decompose_sub) {
      return decompose_cmd(load_matrix(decompose_path, decompose_ring, ring_given(decompose_sub)),
                           machine, out, err);
    }
    if (*mul_sub) {
      const Mat4 f = load_matrix(mul_paths[0], mul_ring, ring_given(mul_sub));
      const Mat4 g = load_matrix(mul_paths[1], mul_ring, ring_given(mul_sub));
      print_document(out, matrix_document(f * g), machine);
      return kOk;
    }
    if (*inv_sub) {
      return inv_cmd(load_matrix(inv_path, inv_ring, ring_given(inv_sub)), machine, out, err);
    }
    if (*enumerate_sub) {
      return enumerate_cmd(enumerate_ring.resolve(), enumerate_opts, machine, out, err);
    }
    if (*verify_sub) return verify_cmd(verify_ring.resolve(), verify_opts, machine, out);
    if (*prove_sub) return prove_cmd(identity, machine, out);
    if (*random_sub) return random_cmd(random_ring.resolve(), random_seed, machine, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kMalformed;
  }
  err << app.help();
  return kMalformed;
}

}  // namespace suzuki::cli
