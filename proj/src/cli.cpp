// Copyright 2026 The Authors.
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


#include "regflow/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "regflow/errors.hpp"
#include "regflow/exact_linalg.hpp"
#include "regflow/flow_lattice.hpp"
#include "regflow/gram_analysis.hpp"
#include "regflow/matroid.hpp"
#include "regflow/reconstruct.hpp"
#include "regflow/text_io.hpp"

namespace regflow {

namespace {

struct Options {
  bool porcelain = false;
  bool json = false;
  bool basis_input = false;
  std::string format = "auto";
  std::string base;
  std::string mode = "flow";
  std::string gram_out;
  std::vector<std::string> files;
  std::string vec;
  Limits limits;
};

enum Status { kYes = 0, kNo = 1, kFailure = 2 };

class Session {
 public:
  Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  int tu_check();
  int circuits_cmd();
  int coloops();
  int flows(bool cuts);
  int decompose();
  int simple();
  int gtest();
  int xmatrix();
  int signing();
  int reconstruct();
  int isometric();

 private:
  RegularMatroid load_matroid(const std::string& path) const;
  IntegerMatrix load_matrix(const std::string& path) const;
  GramMatrix load_gram(const std::string& path) const {
    return parse_gram(read_file(path));
  }
  IntegerVector load_vector(const std::string& arg) const;

  void section(const std::string& name) {
    out_ << (opt_.porcelain ? name : lower(name) + ":") << '\n';
  }
  void matrix(const IntegerMatrix& m) { block(to_text(m)); }
  // Human mode indents bodies; porcelain keeps them parseable.
  void block(const std::string& text) {
    if (opt_.porcelain) {
      out_ << text;
      return;
    }
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) out_ << "  " << line << '\n';
  }
  static std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
  }
  std::string labels(const RegularMatroid& m, const GroundSubset& s) const {
    std::string text = opt_.porcelain ? "" : "{";
    bool first = true;
    for (std::size_t e : s) {
      if (!first) text += opt_.porcelain ? " " : ",";
      text += m.ground()[e];
      first = false;
    }
    return opt_.porcelain ? text : text + "}";
  }
  GroundSubset chosen_base(const RegularMatroid& m) const;

  const Options& opt_;
  std::ostream& out_;
};

RegularMatroid Session::load_matroid(const std::string& path) const {
  const std::string text = read_file(path);
  if (opt_.format == "graph") {
    const auto edges = parse_graph(text);
    return from_graph(edges);
  }
  if (opt_.format == "matroid") return parse_matroid(text, opt_.limits);
  if (opt_.format == "matrix") {
    IntegerMatrix rep = parse_matrix(text);
    std::vector<std::string> names;
    for (std::size_t e = 0; e < rep.cols(); ++e) names.push_back("e" + std::to_string(e + 1));
    return RegularMatroid(std::move(names), std::move(rep), opt_.limits);
  }
  return parse_regular_matroid(text, opt_.limits);
}

IntegerMatrix Session::load_matrix(const std::string& path) const {
  const std::string text = read_file(path);
  if (opt_.format == "graph") {
    const auto edges = parse_graph(text);
    return from_graph(edges).rep();
  }
  if (opt_.format == "matroid") return parse_matroid(text, opt_.limits).rep();
  if (opt_.format == "auto") {
    switch (detect_kind(text)) {
      case InputKind::kMatroid:
        return parse_matroid_matrix(text);
      case InputKind::kGram:
        return parse_gram(text).entries();
      default:
        break;
    }
  }
  return parse_matrix(text);
}

IntegerVector Session::load_vector(const std::string& arg) const {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return parse_vector(read_file(arg));
  return parse_vector(arg);
}

GroundSubset Session::chosen_base(const RegularMatroid& m) const {
  if (opt_.base.empty()) return m.first_base();
  std::vector<std::size_t> idx;
  std::string item;
  std::istringstream is(opt_.base);
  while (std::getline(is, item, ',')) {
    if (!item.empty()) idx.push_back(m.index_of(item));
  }
  return GroundSubset(std::move(idx));
}

int Session::tu_check() {
  const IntegerMatrix m = load_matrix(opt_.files[0]);
  const auto tu = is_totally_unimodular(m, opt_.limits.tu_order);
  const auto wu = is_weakly_unimodular(m, opt_.limits.tu_order);
  auto report = [&](const char* tag, const char* name, const UnimodularityVerdict& v) {
    auto list = [](const std::vector<std::size_t>& idx) {
      std::string s;
      for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i] + 1);
      return s;
    };
    if (opt_.porcelain) {
      out_ << tag << ' ' << (v.holds ? 1 : 0);
      if (v.witness) {
        out_ << " rows=" << list(v.witness->rows) << " cols=" << list(v.witness->cols)
             << " det=" << v.witness->det;
      }
    } else {
      out_ << name << ": " << (v.holds ? "yes" : "no");
      if (v.witness) {
        out_ << " (rows {" << list(v.witness->rows) << "} cols {" << list(v.witness->cols)
             << "} det " << v.witness->det << ")";
      }
    }
    out_ << '\n';
  };
  report("TU", "totally unimodular", tu);
  report("WU", "weakly unimodular", wu);
  return tu.holds ? kYes : kNo;
}

int Session::circuits_cmd() {
  const RegularMatroid m = load_matroid(opt_.files[0]);
  const auto all = circuits(m, opt_.limits);
  if (!opt_.porcelain) out_ << all.size() << " circuits\n";
  for (const auto& c : all) out_ << labels(m, c) << '\n';
  return kYes;
}

int Session::coloops() {
  const RegularMatroid m = load_matroid(opt_.files[0]);
  const auto lc = loops_and_coloops(m);
  if (opt_.porcelain) {
    out_ << "LOOPS" << (lc.loops.empty() ? "" : " ") << labels(m, lc.loops) << '\n';
    out_ << "COLOOPS" << (lc.coloops.empty() ? "" : " ") << labels(m, lc.coloops) << '\n';
  } else {
    out_ << "loops: " << labels(m, lc.loops) << '\n';
    out_ << "co-loops: " << labels(m, lc.coloops) << '\n';
  }
  return kYes;
}

int Session::flows(bool cuts) {
  const RegularMatroid m = load_matroid(opt_.files[0]);
  const GroundSubset base = chosen_base(m);
  const FlowLattice lattice = cuts ? cut_basis(m, base) : fundamental_basis(m, base);
  out_ << (opt_.porcelain ? "BASE" : "base:") << (opt_.porcelain && base.empty() ? "" : " ")
       << labels(m, base) << '\n';
  section("BASIS");
  matrix(lattice.basis());
  section("GRAM");
  block(gram_text(lattice.gram()));
  if (!opt_.gram_out.empty()) {
    std::ofstream file(opt_.gram_out, std::ios::binary);
    file << gram_text(lattice.gram());
    if (!file) throw Error(ErrorCode::kParse, "cannot write " + opt_.gram_out);
  }
  return kYes;
}

int Session::decompose() {
  const RegularMatroid m = load_matroid(opt_.files[0]);
  const FlowVector beta(load_vector(opt_.vec));
  const FlowLattice lattice = fundamental_basis(m, m.first_base());
  const auto parts = consistent_decompose(lattice, beta);
  if (const auto problem = check_consistent_decomposition(m, beta, parts)) {
    throw std::logic_error("decomposition failed its own check: " + *problem);
  }
  for (const auto& a : parts) out_ << to_text(a) << '\n';
  out_ << "sum OK\n";
  return kYes;
}

int Session::simple() {
  const RegularMatroid m = load_matroid(opt_.files[0]);
  const FlowVector alpha(load_vector(opt_.vec));
  const FlowLattice lattice = fundamental_basis(m, m.first_base());
  const SimplicityVerdict v = is_simple_metric(lattice, alpha);
  if (v.simple) {
    out_ << "SIMPLE\n";
    return kYes;
  }
  out_ << "NOT-SIMPLE\n";
  const char* sep = opt_.porcelain ? " " : ": ";
  out_ << "beta" << sep << to_text(v.beta) << '\n';
  out_ << "gamma" << sep << to_text(v.gamma) << '\n';
  out_ << "inner" << sep << v.inner_product << '\n';
  return kNo;
}

int Session::gtest() {
  const GramMatrix a = load_gram(opt_.files[0]);
  const Classification c = classify(a, opt_.limits);
  if (!c.g_nonnegative) {
    out_ << "NOT-G-NONNEGATIVE S=" << mask_text(*c.negative_at) << '\n';
  } else if (!c.g_positive) {
    out_ << "G-NONNEGATIVE\n";
    if (!opt_.porcelain) out_ << "not g-positive: g(" << mask_text(*c.vanishing_singleton) << ") = 0\n";
  } else {
    out_ << "G-POSITIVE\n";
  }
  if (opt_.porcelain) {
    out_ << "ROWS " << c.row_count() << '\n';
  } else {
    out_ << "k = -g(∅) = " << c.row_count() << '\n';
  }

  std::vector<IndexMask> order;
  for (IndexMask m = 1; m < c.tables.g.size(); ++m) order.push_back(m);
  std::sort(order.begin(), order.end(), subset_order_less);
  for (IndexMask m : order) {
    if (opt_.porcelain) {
      out_ << mask_text(m) << ' ' << c.tables.f[m] << ' ' << c.tables.g[m] << '\n';
    } else {
      out_ << "  f(" << mask_text(m) << ") = " << c.tables.f[m] << "  g(" << mask_text(m)
           << ") = " << c.tables.g[m] << '\n';
    }
  }
  return c.g_nonnegative ? kYes : kNo;
}

int Session::xmatrix() {
  const GramMatrix a = load_gram(opt_.files[0]);
  const Classification c = classify(a, opt_.limits);
  if (!c.g_nonnegative) {
    out_ << "NOT-G-NONNEGATIVE S=" << mask_text(*c.negative_at) << '\n';
    return kNo;
  }
  const IntegerMatrix x = build_x(c);
  if (!opt_.porcelain) out_ << "X(A) with " << x.rows() << " rows:\n";
  matrix(x);
  return kYes;
}

int Session::signing() {
  const IntegerMatrix x = load_matrix(opt_.files[0]);
  const auto u = tu_signing(x, opt_.limits);
  if (!u) {
    out_ << "NO-TU-SIGNING\n";
    return kNo;
  }
  if (!opt_.porcelain) out_ << "TU signing:\n";
  matrix(*u);
  return kYes;
}

nlohmann::json matrix_json(const IntegerMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer& v = m(i, j);
      if (v.fits_slong_p()) {
        row.push_back(v.get_si());
      } else {
        row.push_back(v.get_str());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int Session::reconstruct() {
  const std::string& path = opt_.files[0];
  const ReconstructionReport r = opt_.basis_input
                                     ? reconstruct_from_basis(parse_matrix(read_file(path)), opt_.limits)
                                     : reconstruct_matroid(load_gram(path), opt_.limits);
  if (opt_.json) {
    nlohmann::json doc;
    doc["verdict"] = r.feasible() ? "G-FEASIBLE" : "NOT-G-FEASIBLE";
    if (!r.feasible()) doc["reason"] = r.feasibility.verdict_line();
    doc["gram"] = matrix_json(r.gram.entries());
    if (r.feasibility.x) doc["x"] = matrix_json(*r.feasibility.x);
    if (r.feasible()) {
      doc["certificate"] = matrix_json(*r.certificate);
      doc["standard_form"] = matrix_json(*r.standard_form);
      doc["ground"] = r.matroid->ground();
      doc["rank"] = r.matroid->rank();
      doc["zero_rows"] = r.zero_rows;
    }
    out_ << doc.dump(2) << '\n';
  } else {
    out_ << to_text(r);
  }
  return r.feasible() ? kYes : kNo;
}

int Session::isometric() {
  const RegularMatroid m = load_matroid(opt_.files[0]);
  const RegularMatroid n = load_matroid(opt_.files[1]);
  IsometryResult r;
  if (opt_.mode == "flow") {
    r = flow_lattices_isometric(m, n, opt_.limits);
  } else if (opt_.mode == "cut") {
    r = cut_lattices_isometric(m, n, opt_.limits);
  } else {
    r = mixed_isometric(m, n, opt_.limits);
  }
  if (!r.isometric) {
    out_ << "NOT-ISOMETRIC\n";
    return kNo;
  }
  const IsometryWitness& w = *r.witness;
  out_ << "ISOMETRIC\n";
  section("BIJECTION");
  for (std::size_t e = 0; e < w.bijection.size(); ++e) {
    out_ << (opt_.porcelain ? "" : "  ") << w.first.ground()[e] << " -> "
         << w.second.ground()[w.bijection[e]] << '\n';
  }
  section("GRAM");
  block(gram_text(w.gram));
  return kYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Flow and cut lattices of regular matroids", "regflow"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--porcelain", opt.porcelain, "Stable machine-readable output");
  app.add_option("--format", opt.format, "Input format")
      ->check(CLI::IsMember({"auto", "graph", "matroid", "matrix"}));
  app.add_option("--tu-bound", opt.limits.tu_order, "Largest order for TU enumeration")
      ->envname("REGFLOW_TU_BOUND")
      ->check(CLI::PositiveNumber);
  app.add_option("--circuit-bound", opt.limits.circuit_elements, "Largest ground set for circuits")
      ->envname("REGFLOW_CIRCUIT_BOUND")
      ->check(CLI::PositiveNumber);
  app.add_option("--iso-bound", opt.limits.iso_elements, "Largest ground set for isomorphism")
      ->envname("REGFLOW_ISO_BOUND")
      ->check(CLI::PositiveNumber);
  app.add_option("--gram-bound", opt.limits.gram_order, "Largest Gram order for subset tables")
      ->envname("REGFLOW_GRAM_BOUND")
      ->check(CLI::PositiveNumber);

  std::string verb;
  opt.files.resize(2);
  auto add = [&](const std::string& name, const std::string& help, std::size_t files) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", opt.files[0], "Input file")->required();
    if (files > 1) sub->add_option("file2", opt.files[1], "Second input file")->required();
    sub->callback([&verb, name] { verb = name; });
    return sub;
  };
  add("tu-check", "Total and weak unimodularity of a matrix", 1);
  add("circuits", "List the circuits of a graph or matroid", 1);
  add("coloops", "Loops and co-loops", 1);
  add("flows", "Fundamental basis of the flow lattice and its Gram matrix", 1)
      ->add_option("--base", opt.base, "Comma-separated base labels");
  auto* cuts = add("cuts", "Basis of the cut lattice and its Gram matrix", 1);
  cuts->add_option("--base", opt.base, "Comma-separated base labels");
  for (auto* sub : {app.get_subcommand("flows"), cuts}) {
    sub->add_option("--gram-out", opt.gram_out, "Also write the Gram matrix to this file");
  }
  add("decompose", "Consistent decomposition of a flow into simple flows", 1)
      ->add_option("vec", opt.vec, "Flow as a file or inline list")->required();
  add("simple", "Metric simplicity test for a lattice flow", 1)
      ->add_option("vec", opt.vec, "Flow as a file or inline list")->required();
  add("gtest", "g-nonnegativity and g-positivity with f/g tables", 1);
  add("xmatrix", "The 0/1 matrix X(A) of a g-nonnegative Gram matrix", 1);
  add("signing", "Totally unimodular signing of a 0/1 matrix", 1);
  auto* rec = add("reconstruct", "Rebuild the co-loop-free matroid from a Gram matrix", 1);
  rec->add_flag("--json", opt.json, "Key-value report");
  rec->add_flag("--basis", opt.basis_input, "Input is a lattice basis, one vector per column");
  add("isometric", "Decide isometry of flow or cut lattices", 2)
      ->add_option("--mode", opt.mode, "flow, cut or mixed")
      ->check(CLI::IsMember({"flow", "cut", "mixed"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kYes : kFailure;
  }

  Session session(opt, out);
  try {
    if (verb == "tu-check") return session.tu_check();
    if (verb == "circuits") return session.circuits_cmd();
    if (verb == "coloops") return session.coloops();
    if (verb == "flows") return session.flows(false);
    if (verb == "cuts") return session.flows(true);
    if (verb == "decompose") return session.decompose();
    if (verb == "simple") return session.simple();
    if (verb == "gtest") return session.gtest();
    if (verb == "xmatrix") return session.xmatrix();
    if (verb == "signing") return session.signing();
    if (verb == "reconstruct") return session.reconstruct();
    if (verb == "isometric") return session.isometric();
    throw Error(ErrorCode::kUsage, "unknown command");
  } catch (const Error& e) {
    err << "ERROR " << error_code_name(e.code()) << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "ERROR E_INTERNAL: " << e.what() << '\n';
  }
  return kFailure;
}

}  // namespace regflow
