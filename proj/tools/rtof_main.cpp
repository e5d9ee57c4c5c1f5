// Copyright 2026 The rtof Authors
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

// rtof: synthesize, verify and count T gates of Clifford+T constructions.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "rtof/constructions.hpp"
#include "rtof/verify.hpp"

namespace {

using namespace rtof;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::string name;
  int k = 0;
  int m = 0;
  std::string variant;
  int kmax = 8;
  std::string format;
  std::string out;
  bool stdin_input = false;
  bool table = false;
  std::vector<std::string> files;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text;
}

std::string slurp(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Circuit read_circuit_file(const std::string& path) {
  if (path == "-") return parse_text(slurp(std::cin));
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  return parse_text(slurp(f));
}

ConstructionSpec make_spec(const Options& o) {
  if (o.name.empty()) throw UsageError("a construction name is required (see `rtof list`)");
  const RegistryEntry& e = find_construction(o.name);
  Params p;
  p.k = o.k;
  p.m = o.m;
  p.variant = o.variant.empty() ? e.default_variant : o.variant;
  if (e.min_k > 0 && o.k == 0) throw UsageError(o.name + " needs --k (minimum " + std::to_string(e.min_k) + ")");
  if (!e.variants.empty() &&
      std::find(e.variants.begin(), e.variants.end(), p.variant) == e.variants.end()) {
    throw UsageError("unknown variant '" + p.variant + "' for " + o.name);
  }
  return e.make(p);
}

std::string support_str(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

json sidecar(const ConstructionSpec& s) {
  return {{"schema", 1},
          {"name", s.name},
          {"k", s.k},
          {"m", s.m},
          {"variant", s.variant},
          {"kind", target_kind_name(s.target.kind)},
          {"formula", s.formula},
          {"formula_tcounts", s.formula_tcounts},
          {"phase_support", s.target.support},
          {"validity", s.validity},
          {"notes", s.notes},
          {"circuit", to_text(s.circuit)}};
}

int cmd_list(const Options& o) {
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& e : registry()) {
      arr.push_back({{"name", e.name},
                     {"summary", e.summary},
                     {"min_k", e.min_k},
                     {"uses_m", e.uses_m},
                     {"variants", e.variants}});
    }
    emit(o, json{{"schema", 1}, {"constructions", arr}}.dump(2) + "\n");
    return kOk;
  }
  std::ostringstream os;
  for (const auto& e : registry()) {
    os << e.name;
    if (e.min_k) os << "  (k >= " << e.min_k << (e.uses_m ? ", m" : "") << ")";
    if (!e.variants.empty()) {
      os << "  variants:";
      for (const auto& v : e.variants) os << " " << v;
    }
    os << "\n    " << e.summary << "\n";
  }
  emit(o, os.str());
  return kOk;
}

int cmd_synth(const Options& o) {
  const ConstructionSpec s = make_spec(o);
  if (o.format == "json") {
    emit(o, sidecar(s).dump(2) + "\n");
  } else if (o.format.empty() || o.format == "circuit-text") {
    emit(o, to_text(s.circuit));
  } else {
    throw UsageError("synth: format must be circuit-text or json");
  }
  return kOk;
}

std::string report_text(const VerificationReport& r, const std::string& extra) {
  std::ostringstream os;
  os << "construction  " << r.name;
  if (!r.variant.empty()) os << " [" << r.variant << "]";
  os << "  k=" << r.k << " m=" << r.m << "\n";
  os << "kind          " << target_kind_name(r.kind) << "\n";
  os << "semantics     " << (r.semantics_ok ? "ok" : "FAIL") << "\n";
  if (!r.detail.empty()) os << "detail        " << r.detail << "\n";
  os << "phase support " << support_str(r.support_found) << " declared "
     << support_str(r.support_declared) << "\n";
  os << "T-count       " << set_str(r.tcount.values()) << " expected " << set_str(r.expected_tcounts)
     << (r.tcount_ok ? "  ok" : "  MISMATCH") << "\n";
  for (const auto& [o, v] : r.tcount.per_outcome) {
    if (!o.empty()) os << "  outcome " << o << ": " << v << "\n";
  }
  for (const auto& [o, s] : r.branch_scalars) os << "  branch " << o << " scalar " << s << "\n";
  for (const auto& n : r.notes) os << "note          " << n << "\n";
  os << extra;
  os << "result        " << (r.ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

int cmd_verify(const Options& o) {
  ConstructionSpec s = make_spec(o);
  std::string extra;
  if (o.stdin_input) {
    const Circuit c = parse_text(slurp(std::cin));
    const bool same = to_text(c) == to_text(s.circuit);
    extra = std::string("round trip    ") + (same ? "identical" : "differs from generator") + "\n";
    s.circuit = c;
  }
  const VerificationReport r = check_construction(s);
  if (o.format == "json") {
    emit(o, to_json(r) + "\n");
  } else {
    emit(o, report_text(r, extra));
  }
  return r.ok() ? kOk : kFail;
}

int cmd_tcount(const Options& o) {
  if (o.table) {
    const auto rows = table_ledger(o.kmax);
    emit(o, o.format == "json" ? to_json(rows) + "\n" : render_table(rows));
    for (const auto& r : rows) {
      if (!r.reference_only && !r.match) return kFail;
    }
    return kOk;
  }
  Circuit c;
  std::set<int> expected;
  bool have_expected = false;
  if (o.stdin_input) {
    c = parse_text(slurp(std::cin));
  } else {
    const ConstructionSpec s = make_spec(o);
    c = s.circuit;
    expected = s.formula_tcounts;
    have_expected = true;
  }
  const TCount t = t_count(c);
  if (o.format == "json") {
    json j{{"schema", 1},
           {"unconditional", t.unconditional},
           {"per_outcome", t.per_outcome},
           {"values", t.values()}};
    if (have_expected) j["expected"] = expected;
    emit(o, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "T-count " << set_str(t.values());
    if (have_expected) os << " expected " << set_str(expected);
    os << "\n";
    for (const auto& [k, v] : t.per_outcome) {
      if (!k.empty()) os << "  outcome " << k << ": " << v << "\n";
    }
    emit(o, os.str());
  }
  return !have_expected || t.values() == expected ? kOk : kFail;
}

int cmd_equiv(const Options& o) {
  std::vector<Circuit> cs;
  if (o.stdin_input) cs.push_back(parse_text(slurp(std::cin)));
  for (const auto& f : o.files) cs.push_back(read_circuit_file(f));
  if (cs.size() != 2) throw UsageError("equiv needs exactly two circuits (files, or --stdin plus one file)");
  if (cs[0].n_qubits != cs[1].n_qubits) throw UsageError("equiv: register sizes differ");
  bool equal = false;
  std::string how;
  const bool m0 = cs[0].n_cbits > 0, m1 = cs[1].n_cbits > 0;
  if (!m0 && !m1) {
    equal = unitary_of(cs[0]) == unitary_of(cs[1]);
    how = "unitary";
  } else if (m0 && m1) {
    throw UsageError("equiv: at most one circuit may measure");
  } else {
    const Circuit& meas = m0 ? cs[0] : cs[1];
    const Circuit& uni = m0 ? cs[1] : cs[0];
    const auto inputs = all_inputs(meas.n_qubits);
    const BranchMap bm = kraus_of(meas, inputs);
    const SparseMatrix u = columns_of(uni, inputs);
    SparseMatrix target(Index{1} << bm.kept_qubits.size(), inputs.size());
    for (std::size_t j = 0; j < inputs.size(); ++j) {
      for (const auto& [r, v] : u.columns[j]) {
        target.set(project_index(r, uni.n_qubits, bm.kept_qubits), j, v);
      }
    }
    equal = channel_equals(bm, target, ChannelMode::Exact).equal && trace_preserving(bm);
    how = "channel";
  }
  if (o.format == "json") {
    emit(o, json{{"schema", 1}, {"equal", equal}, {"compared_as", how}}.dump(2) + "\n");
  } else {
    emit(o, std::string(equal ? "equal" : "differ") + " (" + how + ")\n");
  }
  return equal ? kOk : kFail;
}

int cmd_appendix(const Options& o) {
  const auto ids = appendix_identities();
  if (o.format == "json") {
    emit(o, to_json(ids) + "\n");
  } else {
    std::ostringstream os;
    for (const auto& r : ids) {
      os << r.name << " k=" << r.k << " " << (r.holds ? "holds" : "FAILS") << "  " << r.detail << "\n";
    }
    emit(o, os.str());
  }
  for (const auto& r : ids) {
    if (!r.holds) return kFail;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford+T relative-phase Toffoli toolkit"};
  app.require_subcommand(1);
  Options o;

  auto params = [&](CLI::App* sub) {
    sub->add_option("name", o.name, "construction name");
    sub->add_option("--k", o.k, "number of controls")->check(CLI::NonNegativeNumber);
    sub->add_option("--m", o.m, "number of clean ancillas")->check(CLI::NonNegativeNumber);
    sub->add_option("--variant", o.variant, "construction variant");
  };
  auto common = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", o.out, "write output to a file");
  };

  auto* list = app.add_subcommand("list", "list registered constructions");
  common(list, {"text", "json"});
  auto* synth = app.add_subcommand("synth", "emit a construction's circuit");
  params(synth);
  common(synth, {"circuit-text", "json"});
  auto* verify = app.add_subcommand("verify", "simulate and check a construction");
  params(verify);
  common(verify, {"text", "json"});
  verify->add_flag("--stdin", o.stdin_input, "verify the circuit read from standard input");
  auto* tcount = app.add_subcommand("tcount", "count T gates per measurement outcome");
  params(tcount);
  common(tcount, {"text", "table", "json"});
  tcount->add_flag("--table", o.table, "print the full T-count ledger");
  tcount->add_option("--kmax", o.kmax, "largest k in the ledger")->check(CLI::Range(2, 12));
  tcount->add_flag("--stdin", o.stdin_input, "count the circuit read from standard input");
  auto* equiv = app.add_subcommand("equiv", "compare two circuit files");
  equiv->add_option("files", o.files, "circuit files ('-' for standard input)");
  equiv->add_flag("--stdin", o.stdin_input, "read the first circuit from standard input");
  common(equiv, {"text", "json"});
  auto* appendix = app.add_subcommand("appendix", "check the phase identities");
  common(appendix, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*list) return cmd_list(o);
    if (*synth) return cmd_synth(o);
    if (*verify) return cmd_verify(o);
    if (*tcount) return cmd_tcount(o);
    if (*equiv) return cmd_equiv(o);
    if (*appendix) return cmd_appendix(o);
  } catch (const UsageError& e) {
    std::cerr << "rtof: " << e.what() << "\n";
    return kUsage;
  } catch (const RangeError& e) {
    std::cerr << "rtof: " << e.what() << "\n";
    return kUsage;
  } catch (const CircuitError& e) {
    std::cerr << "rtof: malformed circuit: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "rtof: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
