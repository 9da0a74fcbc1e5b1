#include "multimult/cli.hpp"

#include <algorithm>
#include <sstream>

#include "multimult/ideal_mult.hpp"
#include "multimult/koszul.hpp"
#include "multimult/mixed_multiplicity.hpp"
#include "multimult/sequences.hpp"

namespace multimult {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotDefined: return 2;
    case ErrorCode::Mismatch: return 3;
    default: return 1;
  }
}

namespace {

Json degree_json(const MultiDegree& n) { return Json(n.entries()); }

Json extended_json(const ExtendedDegree& d) {
  if (d.is_minus_infinity()) return "-inf";
  return d.value();
}

Json polynomial_json(const NumericalPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [k, c] : p.terms()) terms.push_back(Json{{"k", degree_json(k)}, {"coeff", c}});
  return Json{{"terms", terms}, {"degree", extended_json(p.degree())}};
}

Json hilbert_json(const HilbertDatum& h) {
  Json out{{"polynomial", polynomial_json(h.polynomial)},
           {"text", h.polynomial.to_string()},
           {"threshold", degree_json(h.threshold)},
           {"certified", h.certified}};
  if (h.window) {
    out["window"] = Json{{"origin", degree_json(h.window->origin())}, {"max", degree_json(h.window->max_corner())}};
  }
  return out;
}

Json result_json(const MultiDegree& k, bool defined, std::optional<Integer> value, const std::string& method,
                 bool certified) {
  return Json{{"k", degree_json(k)},
              {"defined", defined},
              {"value", value ? Json(*value) : Json(nullptr)},
              {"method", method},
              {"certified", certified}};
}

Json elements_json(const ElementSequence& seq) {
  Json out = Json::array();
  for (const auto& x : seq.elements()) out.push_back(x.to_string());
  return out;
}

Json slice_json(const KoszulSlice& s) {
  return Json{{"degree", degree_json(s.degree)},
              {"chain_dims", s.chain_dims},
              {"differential_ranks", s.differential_ranks},
              {"homology", s.homology_lengths},
              {"euler", s.euler},
              {"chain_euler", s.chain_euler},
              {"d_squared_zero", s.d_squared_zero}};
}

// Accumulates results and diagnostics; the worst error decides the exit code.
struct Run {
  Json report;
  int exit_code = 0;

  void note(const std::string& message) { report["diagnostics"].push_back(message); }
  void error(const Error& e) {
    note(e.what());
    const int c = exit_code_for(e.code());
    // MISMATCH outranks everything, then computation errors, then NOT_DEFINED.
    auto rank = [](int code) { return code == 3 ? 3 : code == 1 ? 2 : code == 2 ? 1 : 0; };
    if (rank(c) > rank(exit_code)) exit_code = c;
  }
  void result(Json r) { report["results"].push_back(std::move(r)); }
};

const char* method_name(const std::string& m) {
  if (m == "delta") return "DELTA";
  if (m == "filter") return "FILTER";
  if (m == "chi") return "KOSZUL_CHI";
  if (m == "symbol") return "SYMBOL";
  return "";
}

void require_type(const std::optional<MultiDegree>& type, std::size_t d, const char* flag) {
  if (!type) throw Error(ErrorCode::InvalidArgument, std::string(flag) + " is required");
  if (type->size() != d) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(flag) + " needs " + std::to_string(d) + " entries, got " + type->to_string());
  }
  if (!type->is_natural()) throw Error(ErrorCode::InvalidArgument, std::string(flag) + " must be nonnegative");
}

ElementSequence sequence_flag(const InputDocument& doc, const CommandFlags& flags) {
  if (!flags.sequence) throw Error(ErrorCode::InvalidArgument, "--sequence is required");
  return ElementSequence(parse_elements(doc.ring, *flags.sequence));
}

void run_hilbert(Run& run, const InputDocument& doc) {
  const GradedModule m = doc.build_module();
  const HilbertDatum h = m.hilbert();
  run.report["details"] = Json{{"hilbert", hilbert_json(h)}, {"dim_supp", extended_json(m.dim_supp())}};
  if (!h.certified) run.note("Hilbert polynomial sampled, not certified; see details.hilbert.window");
  const ExtendedDegree deg = h.polynomial.degree();
  if (deg.is_minus_infinity()) return;
  for (const auto& k : defined_types(h.polynomial, deg.value())) {
    if (k.total() != deg.value()) continue;
    run.result(result_json(k, true, h.polynomial.coefficient(k), "DELTA", h.certified));
  }
}

void run_mixed(Run& run, const InputDocument& doc, const CommandFlags& flags, std::uint64_t seed) {
  const GradedModule m = doc.build_module();
  require_type(flags.type, m.grading_dimension(), "--type");
  const MultiDegree k = *flags.type;
  std::vector<std::string> methods;
  if (flags.method == "all") {
    methods = {"delta", "filter", "chi", "symbol"};
  } else if (*method_name(flags.method)) {
    methods = {flags.method};
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown method " + flags.method);
  }
  const HilbertDatum h = m.hilbert();
  Json details{{"hilbert", hilbert_json(h)}};
  if (!h.certified) run.note("Hilbert polynomial sampled, not certified; see details.hilbert.window");
  if (!is_defined(h.polynomial, k)) {
    for (const auto& name : methods) run.result(result_json(k, false, std::nullopt, method_name(name), h.certified));
    run.report["details"] = details;
    throw Error(ErrorCode::NotDefined, "e(M;" + k.to_string() + ") is not defined: P_M has a term above it");
  }

  std::optional<ElementSequence> witness;
  auto get_witness = [&]() -> const ElementSequence& {
    if (!witness) {
      witness = flags.sequence ? sequence_flag(doc, flags) : build_filter_regular_sequence(m, k, seed);
    }
    return *witness;
  };
  std::vector<Integer> values;
  for (const auto& name : methods) {
    try {
      if (name == "delta") {
        const auto r = mixed_multiplicity(m, k);
        run.result(result_json(k, true, r.value, "DELTA", r.certified));
        values.push_back(r.value);
      } else if (name == "filter") {
        const auto r = mixed_multiplicity_via_filter(m, k, seed);
        run.result(result_json(k, true, r.value, "FILTER", r.certified));
        if (r.witness) details["filter_witness"] = elements_json(*r.witness);
        values.push_back(r.value);
      } else if (name == "chi") {
        const auto r = euler_characteristic(m, get_witness());
        run.result(result_json(k, true, r.value, "KOSZUL_CHI", r.certified));
        details["chi_window"] = degree_json(r.window_origin);
        values.push_back(r.value);
      } else {
        const Integer v = mixed_mult_symbol(m, get_witness());
        run.result(result_json(k, true, v, "SYMBOL", h.certified));
        values.push_back(v);
      }
    } catch (const Error& e) {
      run.result(result_json(k, true, std::nullopt, method_name(name), false));
      run.error(e);
    }
  }
  if (witness) details["witness"] = elements_json(*witness);
  run.report["details"] = details;
  if (values.size() > 1 && std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) != values.end()) {
    run.error(Error(ErrorCode::Mismatch, "methods disagree on e(M;" + k.to_string() + ")"));
  }
}

void run_koszul(Run& run, const InputDocument& doc, const CommandFlags& flags) {
  const GradedModule m = doc.build_module();
  const ElementSequence seq = sequence_flag(doc, flags);
  const MultiDegree type = seq.type(m.grading_dimension());
  Json details{{"sequence", elements_json(seq)}, {"type", degree_json(type)}};
  MultiDegree n;
  if (flags.degree) {
    require_type(flags.degree, m.grading_dimension(), "--degree");
    n = *flags.degree;
  } else {
    n = m.hilbert().threshold + type;
  }
  const KoszulSlice s = koszul_slice(m, seq, n);
  details["slices"] = Json::array({slice_json(s)});
  run.result(result_json(n, true, s.euler, "KOSZUL_SLICE", true));
  if (!s.d_squared_zero) run.error(Error(ErrorCode::Mismatch, "d^2 != 0 at " + n.to_string()));
  if (s.euler != s.chain_euler) run.error(Error(ErrorCode::Mismatch, "homology and chain Euler sums differ"));
  if (flags.stabilize) {
    try {
      const EulerResult r = euler_characteristic(m, seq);
      run.result(result_json(type, true, r.value, "KOSZUL_CHI", r.certified));
      details["chi_window"] = degree_json(r.window_origin);
      Json stab = Json::array();
      for (const auto& sl : r.slices) stab.push_back(slice_json(sl));
      details["stabilization_slices"] = stab;
    } catch (const Error& e) {
      run.error(e);
    }
  }
  run.report["details"] = details;
}

void run_sequence_check(Run& run, const InputDocument& doc, const CommandFlags& flags) {
  const GradedModule m = doc.build_module();
  const ElementSequence seq = sequence_flag(doc, flags);
  const MultiDegree type = seq.type(m.grading_dimension());
  const SequenceCertificate c = certify_sequence(m, seq);
  Json ann = Json::array();
  for (const auto& a : c.annihilators) ann.push_back(hilbert_json(a));
  run.report["details"] = Json{{"sequence", elements_json(seq)},
                               {"type", degree_json(type)},
                               {"kind", to_string(c.kind)},
                               {"filter_regular", c.filter_regular},
                               {"system", c.system},
                               {"quotient", hilbert_json(c.quotient)},
                               {"annihilators", ann}};
  std::optional<Integer> len;
  if (c.system) len = c.quotient.polynomial.constant_term();
  run.result(result_json(type, c.system, len, "QUOTIENT_LENGTH", c.certified));
}

SlotSequence slot_sequence(const InputDocument& doc, const std::string& text, const MultiDegree& type) {
  SlotSequence out;
  std::size_t slot = 0, used = 0;
  for (const auto& x : parse_elements(doc.ring, text)) {
    if (x.is_zero() || !x.is_monomial() || x.terms().begin()->second != 1) {
      throw Error(ErrorCode::InvalidArgument, "sequence element " + x.to_string() + " is not a monomial");
    }
    while (slot < type.size() && used == static_cast<std::size_t>(type[slot])) {
      ++slot;
      used = 0;
    }
    if (slot == type.size()) throw Error(ErrorCode::InvalidArgument, "sequence is longer than the type");
    out.push_back({x.monomial(), slot});
    ++used;
  }
  if (static_cast<int>(out.size()) != type.total()) {
    throw Error(ErrorCode::InvalidArgument, "sequence is shorter than the type " + type.to_string());
  }
  return out;
}

Json ideal_check_json(const IdealCheckReport& r, const Ring& ring) {
  Json summands = Json::array();
  for (const auto& s : r.summands) {
    summands.push_back(Json{{"index", s.index},
                            {"type", degree_json(s.type)},
                            {"defined", s.defined},
                            {"value", s.value},
                            {"module", s.module}});
  }
  return Json{{"sequence", to_string(r.sequence, ring)},
              {"value", r.value},
              {"saturation_value", r.saturation_value},
              {"saturation_dim", extended_json(r.saturation_dim)},
              {"weak_fc", r.weak_fc},
              {"summands", summands},
              {"transformation_total", r.transformation_total},
              {"chi", r.chi ? Json(*r.chi) : Json(nullptr)},
              {"symbol", r.symbol ? Json(*r.symbol) : Json(nullptr)}};
}

const IdealSystem& require_system(const InputDocument& doc) {
  if (!doc.system) throw Error(ErrorCode::InvalidArgument, "the input has no system block");
  return *doc.system;
}

void run_ideal(Run& run, const InputDocument& doc, const CommandFlags& flags) {
  const IdealSystem& sys = require_system(doc);
  if (!flags.k0 || *flags.k0 < 0) throw Error(ErrorCode::InvalidArgument, "--k0 must be given and nonnegative");
  require_type(flags.type, sys.ideal_count(), "--type");
  MultiDegree full(sys.ideal_count() + 1);
  full[0] = *flags.k0;
  for (std::size_t i = 0; i < sys.ideal_count(); ++i) full[i + 1] = (*flags.type)[i];
  Json details{{"module", sys.module_string()}, {"type", degree_json(full)}};

  const AssociatedModule assoc(sys);
  details["hilbert"] = hilbert_json(assoc.hilbert());
  run.report["details"] = details;
  try {
    const auto r = ideal_mixed_multiplicity(sys, *flags.k0, *flags.type);
    run.result(result_json(full, true, r.value, "DELTA", r.certified));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotDefined) throw;
    run.result(result_json(full, false, std::nullopt, "DELTA", false));
    run.error(e);
    return;
  }

  std::optional<SlotSequence> seq;
  if (flags.sequence) {
    seq = slot_sequence(doc, *flags.sequence, full);
    details["sequence"] = to_string(*seq, *sys.ring());
    details["rees_superficial"] = is_rees_superficial_sequence(sys, *seq);
    details["weak_fc"] = is_weak_fc_sequence(sys, *seq);
    details["system"] = is_ideal_mult_system(sys, *seq);
  }
  if (flags.verify) {
    if (!seq) {
      seq = find_weak_fc_sequence(sys, full);
      if (!seq) {
        run.report["details"] = details;
        run.error(Error(ErrorCode::NotDefined, "no weak-(FC) sequence of type " + full.to_string() +
                                                   " among generators of the slot ideals"));
        return;
      }
    }
    try {
      const IdealCheckReport rep = verify_ideal_system(sys, *flags.k0, *flags.type, *seq);
      details["verification"] = ideal_check_json(rep, *sys.ring());
      run.result(result_json(full, true, rep.saturation_value, "SATURATION", false));
      if (rep.chi) run.result(result_json(full, true, *rep.chi, "KOSZUL_CHI", false));
      if (rep.symbol) run.result(result_json(full, true, *rep.symbol, "SYMBOL", false));
    } catch (const Error& e) {
      run.error(e);
    }
  }
  run.report["details"] = details;
}

void verify_module(Run& run, const InputDocument& doc, std::uint64_t seed, Json& details) {
  const GradedModule m = doc.build_module();
  const HilbertDatum h = m.hilbert();
  details["hilbert"] = hilbert_json(h);
  if (!h.certified) run.note("Hilbert polynomial sampled, not certified; see details.hilbert.window");
  const ExtendedDegree deg = h.polynomial.degree();
  const int max_total = (deg.is_minus_infinity() ? 0 : deg.value()) + 1;
  Json checks = Json::array();
  for (const auto& k : defined_types(h.polynomial, max_total)) {
    try {
      MainTheoremOptions options;
      options.seed = seed;
      const MainTheoremReport r = verify_main_theorem(m, k, options);
      run.result(result_json(k, true, r.delta, "ALL", r.certified));
      checks.push_back(Json{{"k", degree_json(k)},
                            {"delta", r.delta},
                            {"filter", r.filter},
                            {"chi", r.chi},
                            {"symbol", r.symbol},
                            {"positive", r.positive},
                            {"witness", elements_json(r.witness)},
                            {"other_systems", r.other_systems.size()}});
    } catch (const Error& e) {
      run.result(result_json(k, true, std::nullopt, "ALL", false));
      run.error(e);
    }
  }
  details["main_theorem"] = checks;
}

void verify_system(Run& run, const IdealSystem& sys, Json& details) {
  const AssociatedModule assoc(sys);
  const HilbertDatum h = assoc.hilbert();
  details["associated_hilbert"] = hilbert_json(h);
  const ExtendedDegree deg = h.polynomial.degree();
  if (deg.is_minus_infinity()) return;
  Json checks = Json::array();
  for (const auto& full : defined_types(h.polynomial, deg.value())) {
    if (full.total() != deg.value()) continue;
    const int k0 = full[0];
    const MultiDegree k(std::vector<int>(full.entries().begin() + 1, full.entries().end()));
    const auto seq = find_weak_fc_sequence(sys, full);
    if (!seq) {
      run.result(result_json(full, true, h.polynomial.coefficient(full), "DELTA", false));
      run.note("no weak-(FC) sequence of type " + full.to_string() + "; only the DELTA value is reported");
      continue;
    }
    try {
      const IdealCheckReport rep = verify_ideal_system(sys, k0, k, *seq);
      run.result(result_json(full, true, rep.value, "IDEAL_CHECKS", false));
      Json c = ideal_check_json(rep, *sys.ring());
      c["type"] = degree_json(full);
      checks.push_back(c);
    } catch (const Error& e) {
      run.result(result_json(full, true, std::nullopt, "IDEAL_CHECKS", false));
      run.error(e);
    }
  }
  details["ideal_checks"] = checks;
}

void run_verify(Run& run, const InputDocument& doc, std::uint64_t seed) {
  if (!doc.module && !doc.system) throw Error(ErrorCode::InvalidArgument, "nothing to verify: no module or system");
  Json details = Json::object();
  if (doc.module) verify_module(run, doc, seed, details);
  if (doc.system) verify_system(run, *doc.system, details);
  run.report["details"] = details;
}

Json inputs_json(const std::string& command, const InputDocument& doc, const CommandFlags& flags,
                 std::uint64_t seed) {
  Json vars = Json::array();
  if (doc.ring) {
    for (std::size_t v = 0; v < doc.ring->variable_count(); ++v) {
      vars.push_back(Json{{"name", doc.ring->name(v)}, {"slot", doc.ring->slot(v) + 1}});
    }
  }
  Json in{{"grading", doc.grading}, {"variables", vars}};
  if (doc.module) {
    in["module"] = Json{{"outer", doc.module->outer ? doc.module->outer->to_string() : "(1)"},
                        {"inner", doc.module->inner.to_string()}};
  }
  if (doc.system) in["system"] = doc.system->module_string();
  in["seed"] = seed;
  if (flags.type) in["type"] = degree_json(*flags.type);
  if (command == "mixed") in["method"] = flags.method;
  if (flags.sequence) in["sequence"] = *flags.sequence;
  if (flags.degree) in["degree"] = degree_json(*flags.degree);
  if (flags.k0) in["k0"] = *flags.k0;
  if (command == "koszul") in["stabilize"] = flags.stabilize;
  if (command == "ideal") in["verify"] = flags.verify;
  return in;
}

Json empty_report(const std::string& command) {
  return Json{{"schema", kReportSchema},
              {"command", command},
              {"inputs", Json::object()},
              {"results", Json::array()},
              {"details", Json::object()},
              {"diagnostics", Json::array()}};
}

}  // namespace

CommandOutcome run_command(const std::string& command, const InputDocument& doc, const CommandFlags& flags) {
  Run run{empty_report(command)};
  const std::uint64_t seed = flags.seed.value_or(doc.seed);
  run.report["inputs"] = inputs_json(command, doc, flags, seed);
  try {
    if (command == "hilbert") {
      run_hilbert(run, doc);
    } else if (command == "mixed") {
      run_mixed(run, doc, flags, seed);
    } else if (command == "koszul") {
      run_koszul(run, doc, flags);
    } else if (command == "sequence-check") {
      run_sequence_check(run, doc, flags);
    } else if (command == "ideal") {
      run_ideal(run, doc, flags);
    } else if (command == "verify") {
      run_verify(run, doc, seed);
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown command " + command);
    }
  } catch (const Error& e) {
    run.error(e);
  }
  if (run.exit_code == 0 && run.report["results"].empty()) {
    run.note("empty result");
    run.exit_code = 2;
  }
  run.report["exit_code"] = run.exit_code;
  return {run.exit_code, std::move(run.report)};
}

CommandOutcome error_outcome(const std::string& command, const Error& error) {
  Run run{empty_report(command)};
  run.error(error);
  run.report["exit_code"] = run.exit_code;
  return {run.exit_code, std::move(run.report)};
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    bool flat = std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
    if (flat) {
      std::string out = "(";
      for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + scalar_text(v[i]);
      return out + ")";
    }
  }
  if (v.is_object() && v.contains("terms") && v.contains("degree")) {
    // Polynomials print as their binomial-basis terms.
    std::string out;
    for (const auto& t : v["terms"]) {
      out += (out.empty() ? "" : " + ") + scalar_text(t["coeff"]) + "*C" + scalar_text(t["k"]);
    }
    return out.empty() ? "0" : out;
  }
  return v.dump();
}

void render_table(std::ostringstream& out, const Json& rows, const std::string& indent) {
  std::vector<std::string> cols;
  for (const auto& [key, _] : rows[0].items()) cols.push_back(key);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& c : cols) width.push_back(c.size());
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      line.push_back(r.contains(cols[i]) ? scalar_text(r[cols[i]]) : "");
      width[i] = std::max(width[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    out << indent;
    for (std::size_t i = 0; i < line.size(); ++i) {
      out << line[i];
      if (i + 1 < line.size()) out << std::string(width[i] - line[i].size() + 2, ' ');
    }
    out << "\n";
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
}

void render_value(std::ostringstream& out, const std::string& key, const Json& v, const std::string& indent) {
  const bool rows = v.is_array() && !v.empty() &&
                    std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_object(); });
  if (rows) {
    out << indent << key << ":\n";
    render_table(out, v, indent + "  ");
  } else if (v.is_object() && !(v.contains("terms") && v.contains("degree"))) {
    out << indent << key << ":\n";
    for (const auto& [k, x] : v.items()) {
      if (k == "polynomial" && v.contains("text")) continue;
      render_value(out, k, x, indent + "  ");
    }
  } else {
    out << indent << key << ": " << scalar_text(v) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  out << "command: " << report.value("command", "") << "\n";
  if (report.contains("inputs")) {
    for (const auto& [k, v] : report["inputs"].items()) {
      if (k == "variables") {
        out << "  variables:";
        for (const auto& x : v) out << " " << x["name"].get<std::string>() << "@" << x["slot"].get<int>();
        out << "\n";
      } else {
        render_value(out, k, v, "  ");
      }
    }
  }
  if (!report["results"].empty()) {
    out << "results:\n";
    render_table(out, report["results"], "  ");
  }
  if (report.contains("details") && !report["details"].empty()) {
    out << "details:\n";
    for (const auto& [k, v] : report["details"].items()) render_value(out, k, v, "  ");
  }
  for (const auto& d : report["diagnostics"]) out << "note: " << d.get<std::string>() << "\n";
  out << "exit: " << report.value("exit_code", 0) << "\n";
  return out.str();
}

}  // namespace multimult
