// qlab: generators, transforms and classification for bound quiver algebras.
// Pipelines communicate through the canonical JSON quiver format on
// stdin/stdout; exit code 2 flags input problems, 3 mathematical obstructions.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qlab/qlab.hpp"

using namespace qlab;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::invalid_argument, "cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::invalid_argument, "cannot open output file '" + path + "'");
  out << text;
}

struct IoOptions {
  std::string input = "-";
  std::string output = "-";
  std::string format = "json";
};

void add_io(CLI::App* cmd, IoOptions& io, bool with_input = true) {
  if (with_input) cmd->add_option("-i,--input", io.input, "input file, '-' for stdin");
  cmd->add_option("-o,--output", io.output, "output file, '-' for stdout");
  cmd->add_option("-f,--format", io.format, "output format: json|dot|table");
}

void emit_quiver(const IoOptions& io, const BoundQuiver& bq) {
  if (io.format == "dot")
    write_output(io.output, to_dot(bq));
  else if (io.format == "json")
    write_output(io.output, serialize_bound_quiver(bq));
  else
    fail(errc::invalid_argument, "unknown format '" + io.format + "' for a quiver result");
}

json window_doc(const SliceWindow& w) {
  json j;
  j["kind"] = "window";
  j["mode"] = w.kind == CoverKind::separated ? "separated" : "znq";
  j["from"] = w.m;
  j["to"] = w.l;
  j["step"] = w.step;
  j["base"] = bound_quiver_to_json(w.base);
  j["quiver"] = bound_quiver_to_json(w.window);
  return j;
}

SliceWindow window_from_doc(const json& j) {
  if (!j.is_object() || !j.contains("mode") || !j.contains("base"))
    fail(errc::parse_error, "not a window document (missing 'mode'/'base')");
  BoundQuiver base = bound_quiver_from_json(j["base"]);
  int from = j.at("from").get<int>();
  int to = j.at("to").get<int>();
  std::string mode = j.at("mode").get<std::string>();
  if (mode == "separated") return z_separated(base, from, to);
  if (mode == "znq") return znq_cover(base, from, to);
  fail(errc::parse_error, "unknown cover mode '" + mode + "'");
}

json parse_json_input(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(errc::parse_error, e.what());
  }
  return {};
}

XiFamily xi_family_from_string(const std::string& s) {
  if (s == "A") return XiFamily::A;
  if (s == "D") return XiFamily::D;
  if (s == "E6") return XiFamily::E6;
  if (s == "E7") return XiFamily::E7;
  if (s == "E8") return XiFamily::E8;
  fail(errc::invalid_argument, "unknown family '" + s + "' (A, D, E6, E7, E8)");
}

std::set<std::string> parse_vertex_list(const std::string& s) {
  std::set<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ';' || c == ' ') {
      if (!cur.empty()) out.insert(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.insert(cur);
  return out;
}

std::vector<long> parse_orders(const std::string& s) {
  std::vector<long> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    out.push_back(std::atol(cur.c_str()));
    cur.clear();
  };
  for (char c : s) {
    if (c == ',')
      flush();
    else if (std::isdigit(static_cast<unsigned char>(c)))
      cur += c;
    else
      fail(errc::invalid_argument, "bad orders list '" + s + "'");
  }
  flush();
  if (out.empty()) fail(errc::invalid_argument, "empty orders list");
  return out;
}

std::complex<double> complex_from_json(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2) return {v[0].get<double>(), v[1].get<double>()};
  fail(errc::parse_error, "character entries are numbers or [re, im] pairs");
  return {};
}

json int_matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string hilbert_table(const BoundQuiver& bq, const GradedDims& gd) {
  std::ostringstream os;
  const auto& verts = bq.quiver().vertices();
  std::size_t w = 6;
  for (const auto& v : verts) w = std::max(w, v.size() + 1);
  os << "per-vertex Hilbert rows (degrees 0.." << gd.t_max() << ")\n";
  for (std::size_t i = 0; i < verts.size(); ++i) {
    os << verts[i];
    for (std::size_t pad = verts[i].size(); pad < w; ++pad) os << ' ';
    for (const Int& h : gd.hilbert(i)) os << ' ' << h.str();
    os << "\n";
  }
  for (int t = 0; t <= gd.t_max(); ++t) {
    os << "A_" << t << "\n";
    for (std::size_t i = 0; i < gd.A[t].rows(); ++i) {
      for (std::size_t j = 0; j < gd.A[t].cols(); ++j) {
        std::string s = gd.A[t](i, j).str();
        for (std::size_t pad = s.size(); pad < 3; ++pad) os << ' ';
        os << s << ' ';
      }
      os << "\n";
    }
  }
  return os.str();
}

json classification_to_json(const ClassificationReport& rep) {
  json j;
  j["verdict"] = verdict_name(rep.verdict);
  if (rep.verdict == Verdict::finite) j["h"] = rep.h;
  if (rep.verdict == Verdict::tame) j["d"] = rep.d;
  if (rep.verdict == Verdict::wild) j["rho_witness"] = rep.rho_witness;
  long gk = gk_estimate(rep);
  if (gk < 0)
    j["gk_estimate"] = "infinity";
  else
    j["gk_estimate"] = gk;
  json evidence;
  evidence["char_poly"] = rep.characteristic.str();
  evidence["constant_term"] = rep.constant_term.str();
  json cyc = json::object();
  for (const auto& [k, mult] : rep.cyclotomic_multiplicities)
    cyc[std::to_string(k)] = mult;
  evidence["cyclotomic_multiplicities"] = std::move(cyc);
  if (!rep.non_cyclotomic_part.is_zero() && rep.non_cyclotomic_part.degree() > 0)
    evidence["non_cyclotomic_part"] = rep.non_cyclotomic_part.str();
  evidence["h_max"] = rep.h_max;
  if (!rep.note.empty()) evidence["note"] = rep.note;
  j["evidence"] = std::move(evidence);
  if (!rep.koszul_note.empty()) j["koszul"] = rep.koszul_note;
  return j;
}

json koszul_to_json(const KoszulProfile& prof) {
  json j;
  j["p"] = prof.p;
  j["t_max"] = prof.t_max;
  j["linear_through"] = prof.linear_through;
  if (prof.q)
    j["q"] = *prof.q;
  else
    j["q"] = nullptr;
  j["q_concentrated"] = prof.q_concentrated;
  j["koszul_up_to_depth"] = prof.koszul_up_to_depth();
  json steps = json::array();
  for (std::size_t t = 0; t < prof.steps.size(); ++t) {
    json s;
    s["t"] = t;
    s["generator_degrees"] = prof.steps[t].gen_degrees;
    json sup = json::array();
    for (int d : prof.steps[t].kernel_support) sup.push_back(d);
    s["kernel_support"] = std::move(sup);
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  return j;
}

int classify_n_flag(const BoundQuiver& bq, int n_flag) {
  if (n_flag >= 0) return n_flag;
  if (bq.grade() && *bq.grade() >= 1) return *bq.grade() - 1;
  fail(errc::invalid_argument, "translation degree --n required (input declares no grade)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qlab: bound quiver algebras, covers, slices and classification"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // ---- gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate McKay quivers and relation families");
  gen->require_subcommand(1);

  IoOptions gen_io;
  std::string orders_str;
  bool gen_bare = false;
  auto* gen_abelian = gen->add_subcommand("abelian", "McKay quiver of Z/r1 x ... x Z/rm");
  gen_abelian->add_option("--orders", orders_str, "cyclic orders, e.g. 4,4")->required();
  gen_abelian->add_flag("--bare", gen_bare, "emit the quiver without the rho(s,r) relations");
  add_io(gen_abelian, gen_io, false);

  std::string ade_family = "A";
  int ade_l = 5;
  bool ade_loops = false;
  std::string ade_relations;
  std::string ade_j;
  bool ade_dual = false;
  auto* gen_ade = gen->add_subcommand("ade", "doubled ADE quiver, optionally with loops/relations");
  gen_ade->add_option("--family", ade_family, "A, D, E6, E7 or E8")->required();
  gen_ade->add_option("--l", ade_l, "index l for A_l / D_l");
  gen_ade->add_flag("--loops", ade_loops, "add the SL(3)-embedding loop at each vertex");
  gen_ade->add_option("--relations", ade_relations, "attach a relation family: xi");
  gen_ade->add_option("--J", ade_j, "socle-kill vertex subset, semicolon separated");
  gen_ade->add_flag("--dual", ade_dual, "emit the dual relation family");
  add_io(gen_ade, gen_io, false);

  std::string chart_file;
  long chart_faithful = -1;
  auto* gen_chart = gen->add_subcommand("chartable", "McKay quiver from a character table");
  gen_chart->add_option("--file", chart_file, "character table JSON")->required();
  gen_chart->add_option("--faithful", chart_faithful, "row index of the faithful character");
  add_io(gen_chart, gen_io, false);

  std::string rel_family;
  long rel_s = 4, rel_r = 4;
  std::string rel_xi = "A";
  int rel_l = 5;
  std::string rel_j;
  bool rel_dual = false, rel_slice = false;
  auto* gen_rel = gen->add_subcommand("relations", "relation families rho(s,r) and rho(Xi,J)");
  gen_rel->add_option("--family", rel_family, "sr or xi")->required();
  gen_rel->add_option("--s", rel_s, "first cyclic order (sr)");
  gen_rel->add_option("--r", rel_r, "second cyclic order (sr)");
  gen_rel->add_option("--xi", rel_xi, "Xi family (xi): A, D, E6, E7, E8");
  gen_rel->add_option("--l", rel_l, "index l (xi)");
  gen_rel->add_option("--J", rel_j, "socle-kill vertex subset (xi)");
  gen_rel->add_flag("--dual", rel_dual, "emit rho^perp instead of rho");
  gen_rel->add_flag("--slice", rel_slice, "emit the parameter-free 3-level tau-slice family");
  add_io(gen_rel, gen_io, false);

  // ---- transforms ---------------------------------------------------------
  IoOptions dual_io;
  auto* cmd_dual = app.add_subcommand("dual", "quadratic dual bound quiver");
  add_io(cmd_dual, dual_io);

  IoOptions trivext_io;
  int trivext_twist = 0;
  auto* cmd_trivext = app.add_subcommand("trivext", "trivial extension Delta = Lambda (+) D Lambda");
  cmd_trivext->add_option("--twist", trivext_twist, "twist sign +1/-1 (default: parity of n)");
  add_io(cmd_trivext, trivext_io);

  IoOptions hilbert_io;
  int hilbert_tmax = 4;
  auto* cmd_hilbert = app.add_subcommand("hilbert", "graded dimension matrices A_t");
  cmd_hilbert->add_option("--tmax", hilbert_tmax, "highest degree");
  add_io(cmd_hilbert, hilbert_io);

  IoOptions koszul_io;
  int koszul_tmax = 4;
  auto* cmd_koszul = app.add_subcommand("koszul", "minimal resolution profile of Lambda_0");
  cmd_koszul->add_option("--tmax", koszul_tmax, "resolution depth");
  add_io(cmd_koszul, koszul_io);

  IoOptions cover_io;
  std::string cover_mode = "separated";
  int cover_from = 0, cover_to = 2;
  auto* cmd_cover = app.add_subcommand("cover", "materialize a window of a Z-cover");
  cmd_cover->add_option("--mode", cover_mode, "separated | znq");
  cmd_cover->add_option("--from", cover_from, "lowest level")->required();
  cmd_cover->add_option("--to", cover_to, "highest level")->required();
  add_io(cmd_cover, cover_io);

  IoOptions slice_io;
  int slice_at = 0;
  bool slice_bare = false;
  auto* cmd_slice = app.add_subcommand("slice", "complete tau-slice of a window document");
  cmd_slice->add_option("--at", slice_at, "starting level");
  cmd_slice->add_flag("--bare", slice_bare, "emit the plain quiver without window context");
  add_io(cmd_slice, slice_io);

  IoOptions mutate_io;
  std::string mutate_vertex;
  bool mutate_bare = false;
  auto* cmd_mutate = app.add_subcommand("mutate", "tau-mutation of a slice document");
  cmd_mutate->add_option("--vertex", mutate_vertex, "source or sink to mutate")->required();
  cmd_mutate->add_flag("--bare", mutate_bare, "emit the plain quiver without window context");
  add_io(cmd_mutate, mutate_io);

  IoOptions classify_io;
  int classify_n = -1;
  long classify_hmax = -1;
  auto* cmd_classify = app.add_subcommand("classify", "finite/tame/wild verdict from the Loewy matrix");
  cmd_classify->add_option("--n", classify_n, "translation degree (default: declared grade - 1)");
  cmd_classify->add_option("--hmax", classify_hmax, "scan bound for the Finite branch");
  add_io(cmd_classify, classify_io);

  IoOptions report_io;
  int report_n = -1;
  int report_tmax = 4;
  long report_hmax = -1;
  auto* cmd_report = app.add_subcommand("report", "consolidated hilbert/koszul/classification document");
  cmd_report->add_option("--n", report_n, "translation degree (default: declared grade - 1)");
  cmd_report->add_option("--tmax", report_tmax, "koszul resolution depth");
  cmd_report->add_option("--hmax", report_hmax, "scan bound for the Finite branch");
  add_io(cmd_report, report_io);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen_abelian->parsed()) {
      std::vector<long> orders = parse_orders(orders_str);
      if (!gen_bare && orders.size() == 2 && orders[0] >= 4 && orders[1] >= 4) {
        emit_quiver(gen_io, relations_sr(orders[0], orders[1]));
      } else {
        emit_quiver(gen_io, BoundQuiver(mckay_abelian(orders), {}));
      }
    } else if (gen_ade->parsed()) {
      XiFamily fam = xi_family_from_string(ade_family);
      if (!ade_relations.empty()) {
        if (ade_relations != "xi")
          fail(errc::invalid_argument, "only the xi relation family applies to ADE quivers");
        XiSpec spec;
        spec.family = fam;
        spec.l = ade_l;
        spec.socle_kill = parse_vertex_list(ade_j);
        emit_quiver(gen_io, ade_dual ? relations_xi_dual(spec) : relations_xi(spec));
      } else {
        Quiver q = ade_loops ? mckay_ade(fam, ade_l) : mckay_ade_double(fam, ade_l);
        emit_quiver(gen_io, BoundQuiver(q, {}));
      }
    } else if (gen_chart->parsed()) {
      json doc = parse_json_input(read_input(chart_file));
      CharacterTable table;
      for (const auto& c : doc.at("classes")) table.class_sizes.push_back(c.get<long>());
      for (const auto& row : doc.at("table")) {
        std::vector<std::complex<double>> r;
        for (const auto& v : row) r.push_back(complex_from_json(v));
        table.rows.push_back(std::move(r));
      }
      if (doc.contains("names"))
        for (const auto& n : doc["names"]) table.names.push_back(n.get<std::string>());
      Quiver q;
      if (chart_faithful >= 0) {
        q = mckay_from_characters(table, static_cast<std::size_t>(chart_faithful));
      } else if (doc.contains("faithful") && doc["faithful"].is_number_integer()) {
        q = mckay_from_characters(table, doc["faithful"].get<std::size_t>());
      } else if (doc.contains("faithful")) {
        std::vector<std::complex<double>> chi;
        for (const auto& v : doc["faithful"]) chi.push_back(complex_from_json(v));
        q = mckay_from_characters(table, chi);
      } else {
        fail(errc::invalid_argument, "no faithful character given (--faithful or document key)");
      }
      emit_quiver(gen_io, BoundQuiver(q, {}));
    } else if (gen_rel->parsed()) {
      if (rel_family == "sr") {
        if (rel_slice)
          emit_quiver(gen_io, slice_relations_sr(rel_s, rel_r,
                                                 rel_dual ? SliceSide::dual : SliceSide::primal));
        else
          emit_quiver(gen_io, rel_dual ? relations_sr_dual(rel_s, rel_r)
                                       : relations_sr(rel_s, rel_r));
      } else if (rel_family == "xi") {
        XiSpec spec;
        spec.family = xi_family_from_string(rel_xi);
        spec.l = rel_l;
        spec.socle_kill = parse_vertex_list(rel_j);
        if (rel_slice)
          emit_quiver(gen_io,
                      slice_relations_xi(spec, rel_dual ? SliceSide::dual : SliceSide::primal));
        else
          emit_quiver(gen_io, rel_dual ? relations_xi_dual(spec) : relations_xi(spec));
      } else {
        fail(errc::invalid_argument, "unknown relation family '" + rel_family + "' (sr | xi)");
      }
    } else if (cmd_dual->parsed()) {
      BoundQuiver bq = parse_bound_quiver(read_input(dual_io.input));
      emit_quiver(dual_io, quadratic_dual(bq));
    } else if (cmd_trivext->parsed()) {
      BoundQuiver bq = parse_bound_quiver(read_input(trivext_io.input));
      std::optional<int> twist;
      if (trivext_twist != 0) twist = trivext_twist;
      emit_quiver(trivext_io, trivial_extension(bq, twist).delta);
    } else if (cmd_hilbert->parsed()) {
      BoundQuiver bq = parse_bound_quiver(read_input(hilbert_io.input));
      auto [gd, g] = graded_dims(bq, hilbert_tmax);
      if (hilbert_io.format == "table") {
        write_output(hilbert_io.output, hilbert_table(bq, gd));
      } else {
        json j;
        j["t_max"] = gd.t_max();
        json pv = json::object();
        for (std::size_t i = 0; i < bq.quiver().num_vertices(); ++i) {
          json h = json::array();
          for (const Int& x : gd.hilbert(i)) h.push_back(x.str());
          pv[bq.quiver().vertices()[i]] = std::move(h);
        }
        j["hilbert_per_vertex"] = std::move(pv);
        json mats = json::array();
        for (const auto& a : gd.A) mats.push_back(int_matrix_to_json(a));
        j["A"] = std::move(mats);
        write_output(hilbert_io.output, j.dump(2) + "\n");
      }
    } else if (cmd_koszul->parsed()) {
      BoundQuiver bq = parse_bound_quiver(read_input(koszul_io.input));
      KoszulProfile prof = koszul_profile(bq, koszul_tmax);
      write_output(koszul_io.output, koszul_to_json(prof).dump(2) + "\n");
    } else if (cmd_cover->parsed()) {
      BoundQuiver bq = parse_bound_quiver(read_input(cover_io.input));
      SliceWindow w;
      if (cover_mode == "separated")
        w = z_separated(bq, cover_from, cover_to);
      else if (cover_mode == "znq")
        w = znq_cover(bq, cover_from, cover_to);
      else
        fail(errc::invalid_argument, "unknown cover mode '" + cover_mode + "'");
      if (cover_io.format == "dot")
        write_output(cover_io.output, to_dot(w.window));
      else
        write_output(cover_io.output, window_doc(w).dump(2) + "\n");
    } else if (cmd_slice->parsed()) {
      json doc = parse_json_input(read_input(slice_io.input));
      SliceWindow w = window_from_doc(doc);
      BoundQuiver slice = complete_tau_slice(w, slice_at);
      if (slice_bare || slice_io.format == "dot") {
        emit_quiver(slice_io, slice);
      } else {
        json j;
        j["kind"] = "slice";
        j["window"] = window_doc(w);
        j["quiver"] = bound_quiver_to_json(slice);
        write_output(slice_io.output, j.dump(2) + "\n");
      }
    } else if (cmd_mutate->parsed()) {
      json doc = parse_json_input(read_input(mutate_io.input));
      if (!doc.contains("window") || !doc.contains("quiver"))
        fail(errc::parse_error, "mutate expects a slice document (keys 'window' and 'quiver')");
      SliceWindow w = window_from_doc(doc["window"]);
      BoundQuiver slice = bound_quiver_from_json(doc["quiver"]);
      BoundQuiver mutated = tau_mutation(w, slice, mutate_vertex);
      if (mutate_bare || mutate_io.format == "dot") {
        emit_quiver(mutate_io, mutated);
      } else {
        json j;
        j["kind"] = "slice";
        j["window"] = doc["window"];
        j["quiver"] = bound_quiver_to_json(mutated);
        write_output(mutate_io.output, j.dump(2) + "\n");
      }
    } else if (cmd_classify->parsed()) {
      BoundQuiver bq = parse_bound_quiver(read_input(classify_io.input));
      int n = classify_n_flag(bq, classify_n);
      auto [gd, g] = graded_dims(bq, n + 2);
      LoewyMatrix L = loewy_matrix(gd, n);
      ClassificationReport rep = classify(L, classify_hmax);
      rep.koszul_note = "not evaluated; run `qlab koszul` or `qlab report`";
      json j = classification_to_json(rep);
      j["n"] = n;
      if (classify_io.format == "table") {
        std::ostringstream os;
        os << "verdict: " << verdict_name(rep.verdict);
        if (rep.verdict == Verdict::finite) os << " (h = " << rep.h << ")";
        if (rep.verdict == Verdict::tame) os << " (d = " << rep.d << ")";
        if (rep.verdict == Verdict::wild) os << " (rho ~ " << rep.rho_witness << ")";
        long gk = gk_estimate(rep);
        os << "\ngk_estimate: " << (gk < 0 ? std::string("infinity") : std::to_string(gk))
           << "\n";
        if (!rep.note.empty()) os << "note: " << rep.note << "\n";
        os << "evidence: " << j["evidence"].dump() << "\n";
        write_output(classify_io.output, os.str());
      } else {
        write_output(classify_io.output, j.dump(2) + "\n");
      }
    } else if (cmd_report->parsed()) {
      BoundQuiver bq = parse_bound_quiver(read_input(report_io.input));
      int n = classify_n_flag(bq, report_n);
      json j;
      j["schema"] = "qlab-report/1";
      j["tool"] = json{{"name", "qlab"}, {"version", kVersion}};
      j["config"] = json{{"n", n},
                         {"tmax", report_tmax},
                         {"degree_cap", default_degree_cap(bq)}};
      json input;
      input["vertices"] = bq.quiver().num_vertices();
      input["arrows"] = bq.quiver().num_arrows();
      input["relations"] = bq.relations().size();
      if (bq.grade())
        input["n"] = *bq.grade();
      else
        input["n"] = nullptr;
      j["input"] = std::move(input);

      auto [gd, g] = graded_dims(bq, n + 2);
      json pv = json::object();
      for (std::size_t i = 0; i < bq.quiver().num_vertices(); ++i) {
        json h = json::array();
        for (const Int& x : gd.hilbert(i)) h.push_back(x.str());
        pv[bq.quiver().vertices()[i]] = std::move(h);
      }
      j["hilbert_per_vertex"] = std::move(pv);

      auto st = stable_translation_check(bq, n);
      j["stable_translation"] =
          json{{"stable", st.stable}, {"tau_trivial", st.tau_trivial}, {"reason", st.reason}};

      KoszulProfile prof = koszul_profile(bq, report_tmax);
      j["koszul"] = koszul_to_json(prof);

      LoewyMatrix L = loewy_matrix(gd, n);
      ClassificationReport rep = classify(L, report_hmax);
      if (prof.koszul_up_to_depth())
        rep.koszul_note = "resolution linear through depth " + std::to_string(prof.t_max);
      else if (prof.q)
        rep.koszul_note = "finite pattern: q = " + std::to_string(*prof.q) +
                          (prof.q_concentrated ? ", kernel concentrated" : "");
      j["classification"] = classification_to_json(rep);
      write_output(report_io.output, j.dump(2) + "\n");
    }
  } catch (const error& e) {
    std::cerr << "qlab: " << e.what() << "\n";
    return is_user_error(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "qlab: internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
