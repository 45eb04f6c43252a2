#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rtm/errors.hpp"
#include "rtm/hopf.hpp"
#include "rtm/mzv.hpp"
#include "rtm/relations.hpp"
#include "rtm/tree_maps.hpp"
#include "rtm/verify.hpp"

namespace py = pybind11;
using namespace rtm;

namespace {

// Exact rationals cross the boundary as (numerator, denominator) decimal strings.
using Exact = std::pair<std::string, std::string>;

Exact exact(const Rational& q) { return {q.get_num().get_str(10), q.get_den().get_str(10)}; }

Rational from_exact(const Exact& e) {
  Rational q(parse_integer(e.first), parse_integer(e.second));
  if (sgn(q.get_den()) == 0) throw DomainError("zero denominator");
  q.canonicalize();
  return q;
}

Forest forest_arg(const std::string& text) { return text == "1" ? Forest() : parse_forest(text); }

std::map<std::string, Exact> forest_terms(const ForestSum& s) {
  std::map<std::string, Exact> out;
  for (const auto& [f, c] : s) out.emplace(f.key(), exact(c));
  return out;
}

std::map<std::string, Exact> word_terms(const WordSum& s) {
  std::map<std::string, Exact> out;
  for (const auto& [w, c] : s) out.emplace(w.letters(), exact(c));
  return out;
}

WordSum word_sum_arg(const std::map<std::string, Exact>& terms) {
  WordSum out;
  for (const auto& [w, c] : terms) out.add(Word::parse(w), from_exact(c));
  return out;
}

std::vector<py::tuple> check_rows(const std::vector<CheckResult>& results) {
  std::vector<py::tuple> out;
  for (const auto& r : results) out.push_back(py::make_tuple(r.name, r.pass, r.cases, r.detail));
  return out;
}

RelationSet relations_from_text(const std::string& text) {
  std::istringstream in(text);
  return read_jsonl(in);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rooted tree maps, the derivations ∂_n, and certified MZV numerics";
  m.attr("__version__") = RTM_VERSION;

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);

  m.def("canonical_key", [](const std::string& f) { return forest_arg(f).key(); });
  m.def("enumerate_forests", [](int n) {
    std::vector<std::string> out;
    for (const auto& f : enumerate_forests(n)) out.push_back(f.key());
    return out;
  });
  m.def("coproduct", [](const std::string& f) {
    std::vector<std::tuple<std::string, std::string, Exact>> out;
    for (const auto& [pair, c] : coproduct(forest_arg(f))) out.emplace_back(pair.first.key(), pair.second.key(), exact(c));
    return out;
  });
  m.def("antipode", [](const std::string& f) { return forest_terms(antipode(forest_arg(f))); });
  m.def("dynkin", [](const std::string& f) { return forest_terms(dynkin(forest_arg(f))); });
  m.def("ladder_decomposition", [](int n) { return forest_terms(partial_as_forest_sum(n)); });

  m.def("apply", [](const std::string& f, const std::map<std::string, Exact>& p) {
    return word_terms(rtm::apply(forest_arg(f), word_sum_arg(p)));
  });
  m.def("partial", [](int n, const std::map<std::string, Exact>& p) { return word_terms(partial_n(n, word_sum_arg(p))); });
  m.def("z_encode", [](const std::string& w) { return z_encode(Word::parse(w)).parts; });
  m.def("z_decode", [](const std::vector<int>& k) { return z_decode(ZIndex{k}).letters(); });

  m.def("zeta", [](const std::string& w, const std::string& eps, int digits) {
    const PrecisionConfig cfg = PrecisionConfig::from_string(eps);
    const EvalResult r = zeta_num(Word::parse(w), cfg);
    const int d = digits > 0 ? digits : digits_for(cfg.eps());
    return std::make_pair(r.value.to_string(d), r.bound.to_string(3));
  });
  m.def("z_eval", [](const std::map<std::string, Exact>& p, const std::string& eps) {
    const PrecisionConfig cfg = PrecisionConfig::from_string(eps);
    const EvalResult r = z_eval(word_sum_arg(p), cfg);
    return std::make_pair(r.value.to_string(digits_for(cfg.eps())), r.bound.to_string(3));
  });

  m.def("relations_jsonl", [](int max_degree, int max_weight, bool tree_maps, bool derivations) {
    RunConfig cfg;
    cfg.max_degree = max_degree;
    cfg.max_weight = max_weight;
    cfg.tree_maps = tree_maps;
    cfg.derivations = derivations;
    std::ostringstream out;
    write_jsonl(out, generate(cfg));
    return out.str();
  });
  m.def("rank_by_weight", [](const std::string& jsonl) { return rank_by_weight(relations_from_text(jsonl)); });
  m.def("rank_exact", [](const std::vector<std::vector<Exact>>& rows) {
    RationalMatrix mat;
    for (const auto& row : rows) {
      mat.emplace_back();
      for (const auto& e : row) mat.back().push_back(from_exact(e));
    }
    return rank_exact(mat);
  });
  m.def("span_inclusion", [](const std::string& sub, const std::string& sup) {
    const SpanResult r = span_inclusion(relations_from_text(sub), relations_from_text(sup));
    std::optional<std::string> witness;
    if (r.witness) witness = to_string(*r.witness);
    return std::make_pair(r.included, witness);
  });

  m.def("verify_hopf_axioms", [](int d) { return check_rows(verify_hopf_axioms(d)); });
  m.def("verify_main_theorem", [](int n, int l) { return check_rows(verify_main_theorem(n, l)); });
  m.def("verify_series", [](int order, int log_order) { return check_rows(verify_series(order, log_order)); });
}
