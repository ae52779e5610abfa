#include "mqm/report.hpp"

#include "mqm/algorithms.hpp"
#include "mqm/cup_lab.hpp"
#include "mqm/error.hpp"
#include "mqm/quasimorphism.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mqm {

using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in)
    throw Error("cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty())
    out.push_back(cur);
  return out;
}

std::uint64_t triple_count(std::size_t n) {
  return static_cast<std::uint64_t>(n) * n * n;
}

void check_budget(std::uint64_t need, const RunConfig& cfg, const char* what) {
  if (need > cfg.budget)
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(need) +
                         " tuples exceed the budget of " + std::to_string(cfg.budget));
}

const RaagModel& need_raag(const LoadedModel& lm, const char* cmd) {
  if (!lm.raag)
    throw DomainError(std::string(cmd) + ": requires a raag model");
  return *lm.raag;
}

json model_json(const LoadedModel& lm) {
  json j;
  j["kind"] = lm.kind;
  j["d"] = lm.dim();
  auto s = lm.sigma();
  j["sigma"] = s ? json(*s) : json(nullptr);
  j["sigma_source"] = lm.sigma_source;
  if (lm.graph) {
    j["vertices"] = lm.graph->names();
    json e = json::array();
    for (auto [u, v] : lm.graph->edges())
      e.push_back({lm.graph->name(u), lm.graph->name(v)});
    j["edges"] = e;
  }
  if (lm.wedge)
    j["n"] = lm.wedge->n();
  return j;
}

template <class M> json triple_json(const M& m, const std::array<typename M::Vertex, 3>& t) {
  return json::array({m.format(t[0]), m.format(t[1]), m.format(t[2])});
}

template <class M, class H> json chain_json(const M& m, const std::vector<H>& hs) {
  json a = json::array();
  for (const auto& h : hs)
    a.push_back(m.format(h));
  return a;
}

template <class M> json defect_json(const M& m, const DefectScan<typename M::Vertex>& d) {
  json j;
  j["max_abs"] = d.max_abs;
  j["value"] = d.value;
  j["argmax"] = triple_json(m, d.argmax);
  j["triples"] = d.triples;
  j["bound"] = d.bound ? json(*d.bound) : json(nullptr);
  j["bound_respected"] = d.bound_respected;
  return j;
}

json brooks_scan(const std::vector<Trace>& ball, const Word& w, bool big,
                 unsigned workers, long bound) {
  const std::size_t n = ball.size();
  std::vector<long> table(n * n);
  parallel_chunks(n, workers, [&](std::size_t b, std::size_t e, unsigned) {
    for (std::size_t i = b; i < e; ++i) {
      const Trace inv = invert(ball[i]);
      for (std::size_t j = 0; j < n; ++j) {
        const Word g = multiply(inv, ball[j]).word();
        table[i * n + j] = big ? brooks_big(w, g) : brooks_small(w, g);
      }
    }
  });
  const TripleMax t = scan_triples(table, n, workers);
  json j;
  j["max_abs"] = t.max_abs;
  j["value"] = t.value;
  j["argmax"] = json::array({ball[t.argmax[0]].str(), ball[t.argmax[1]].str(),
                             ball[t.argmax[2]].str()});
  j["triples"] = t.triples;
  j["bound"] = bound;
  j["bound_respected"] = t.max_abs <= bound;
  return j;
}

} // namespace

std::optional<int> LoadedModel::sigma() const {
  if (raag)
    return raag->staircase_bound();
  return std::nullopt;
}

int LoadedModel::dim() const {
  if (raag)
    return raag->dim();
  if (stair)
    return stair->dim();
  return wedge->dim();
}

json read_model_file(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError("model " + path.string() + ": " + e.what());
  }
  if (doc.is_object() && doc.contains("graph") && doc["graph"].is_string()) {
    auto gp = path.parent_path() / doc["graph"].get<std::string>();
    try {
      doc["graph"] = json::parse(read_file(gp));
    } catch (const json::parse_error& e) {
      throw ParseError("graph " + gp.string() + ": " + e.what());
    }
  }
  return doc;
}

LoadedModel load_model(const json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    throw ParseError("model: expected an object with a string 'kind'");
  LoadedModel lm;
  lm.kind = doc["kind"].get<std::string>();
  if (lm.kind == "raag") {
    if (!doc.contains("graph") || !doc["graph"].is_object())
      throw ParseError("model: raag needs a 'graph' object or file name");
    lm.graph = std::make_unique<DefiningGraph>(parse_graph(doc["graph"].dump()));
    std::optional<int> sigma;
    if (doc.contains("sigma")) {
      if (!doc["sigma"].is_number_integer() || doc["sigma"].get<int>() < 1)
        throw ParseError("model: 'sigma' must be a positive integer");
      sigma = doc["sigma"].get<int>();
      lm.sigma_source = "declared";
    }
    lm.raag = std::make_unique<RaagModel>(*lm.graph, sigma);
    if (!sigma && lm.raag->staircase_bound()) {
      lm.sigma_source = "edgeless";
    } else if (!sigma) {
      const auto ball = lm.raag->ball(lm.raag->identity(), 2);
      auto res = staircase_search(*lm.raag, region_halfspaces(*lm.raag, ball), 8);
      lm.raag->set_staircase_bound(std::max(1, res.length));
      lm.sigma_source = "scanned";
    }
  } else if (lm.kind == "staircase") {
    lm.stair = std::make_unique<StaircaseModel>();
  } else if (lm.kind == "wedge") {
    if (!doc.contains("n") || !doc["n"].is_number_integer())
      throw ParseError("model: wedge needs an integer 'n'");
    lm.wedge = std::make_unique<WedgeModel>(doc["n"].get<int>());
  } else {
    throw ParseError("model: unknown kind '" + lm.kind + "'");
  }
  return lm;
}

bool Report::verdicts_ok() const {
  for (const auto& [k, v] : verdicts.items())
    if (v.is_boolean() && !v.get<bool>())
      return false;
  return true;
}

json config_json(const RunConfig& cfg) {
  json j;
  j["command"] = cfg.command;
  j["model_path"] = cfg.model_path;
  j["model"] = cfg.model_doc;
  j["segment"] = cfg.segment;
  j["segment2"] = cfg.segment2;
  j["radius"] = cfg.radius;
  j["window"] = cfg.window ? json(*cfg.window) : json(nullptr);
  j["out"] = cfg.out;
  j["workers"] = cfg.workers;
  j["budget"] = cfg.budget;
  j["elements"] = cfg.elements;
  j["mode"] = cfg.mode;
  j["subset"] = cfg.subset;
  j["gamma"] = cfg.gamma;
  j["n_max"] = cfg.n_max;
  j["bound"] = cfg.bound;
  j["run_anyway"] = cfg.run_anyway;
  return j;
}

std::string config_hash(const RunConfig& cfg) {
  json j = config_json(cfg);
  j.erase("out");
  j.erase("workers");
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json to_json(const Report& r) {
  json j;
  j["config"] = r.config;
  j["config_hash"] = r.config_hash;
  j["model"] = r.model;
  j["results"] = r.results;
  j["verdicts"] = r.verdicts;
  j["complete"] = r.complete;
  if (!r.error.empty())
    j["error"] = r.error;
  j["timing"] = {{"runtime_ms", r.runtime_ms}};
  j["versions"] = {{"mqm", kVersion},
                   {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                         std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                         std::to_string(NLOHMANN_JSON_VERSION_PATCH)}};
  return j;
}

Report cmd_brooks(const RunConfig& cfg) {
  Report rep;
  LoadedModel lm = load_model(cfg.model_doc);
  const RaagModel& m = need_raag(lm, "brooks");
  const DefiningGraph& g = m.graph();
  if (g.edge_count() != 0)
    throw DomainError("brooks: the defining graph has edges, so the group is not free");
  rep.model = model_json(lm);
  const Word w = parse_word(g, cfg.segment);
  if (w.empty() || !freely_reduced(w))
    throw DomainError("brooks: segment must be a nonempty reduced word");
  json& res = rep.results;
  res["word"] = format_word(g, w);
  res["self_overlapping"] = is_self_overlapping(w);

  json els = json::array();
  for (const auto& e : cfg.elements) {
    const Trace x = parse_trace(g, e);
    els.push_back({{"element", x.str()},
                   {"H", brooks_big(w, x.word())},
                   {"h", brooks_small(w, x.word())}});
  }
  res["elements"] = els;

  const auto ball = enumerate_ball(g, cfg.radius);
  check_budget(triple_count(ball.size()), cfg, "brooks");
  res["ball_size"] = ball.size();
  res["defect_big"] = brooks_scan(ball, w, true, cfg.workers,
                                  3 * (static_cast<long>(w.size()) - 1));
  res["defect_small"] = brooks_scan(ball, w, false, cfg.workers, 2);
  rep.verdicts["big_bound"] = res["defect_big"]["bound_respected"];
  rep.verdicts["small_bound"] = res["defect_small"]["bound_respected"];
  return rep;
}

Report cmd_defect(const RunConfig& cfg) {
  Report rep;
  LoadedModel lm = load_model(cfg.model_doc);
  rep.model = model_json(lm);
  json& res = rep.results;
  if (lm.raag) {
    const RaagModel& m = *lm.raag;
    const auto s = parse_segment(m.graph(), cfg.segment);
    const auto ball = m.ball(m.identity(), cfg.radius);
    check_budget(triple_count(ball.size()), cfg, "defect");
    res["segment"] = format_word(m.graph(), s.word);
    res["ball_size"] = ball.size();
    const auto d = coboundary_scan_region(m, s, ball, cfg.workers);
    res["defect"] = defect_json(m, d);
    if (d.bound)
      rep.verdicts["bound"] = d.bound_respected;
  } else if (lm.stair) {
    const StaircaseModel& m = *lm.stair;
    if (!cfg.segment.empty() && cfg.segment != "standard")
      throw DomainError("defect: the staircase model only knows the segment 'standard'");
    const auto s = StaircaseModel::standard_segment();
    res["segment"] = chain_json(m, s.halfspaces);
    json series = json::array();
    for (long n = 1; n <= static_cast<long>(cfg.radius); ++n) {
      // (0,0), (0,n+1), (n+1,n+1) and the shifted family ending at (n,n).
      const long lit = delta_f_s(m, s, {0, 0}, {0, n + 1}, {n + 1, n + 1});
      const long sh = delta_f_s(m, s, {0, 0}, {0, n}, {n, n});
      series.push_back({{"n", n}, {"value", lit}, {"value_side_n", sh}});
    }
    res["series"] = series;
    res["bound"] = nullptr;
  } else {
    const WedgeModel& m = *lm.wedge;
    if (!cfg.segment.empty() && cfg.segment != "standard")
      throw DomainError("defect: the wedge model only knows the segment 'standard'");
    const auto s = WedgeModel::standard_segment();
    const long n = m.n();
    const long v = delta_f_s(m, s, m.corner(-1), m.origin(), m.corner(1));
    res["segment"] = chain_json(m, s.halfspaces);
    res["triple"] = triple_json(m, {m.corner(-1), m.origin(), m.corner(1)});
    res["value"] = v;
    res["group_order"] = m.group().size();
    res["bound"] = nullptr;
    rep.verdicts["at_most_minus_n_squared"] = v <= -n * n;
  }
  return rep;
}

Report cmd_cup(const RunConfig& cfg) {
  Report rep;
  LoadedModel lm = load_model(cfg.model_doc);
  const RaagModel& m = need_raag(lm, "cup");
  rep.model = model_json(lm);
  const auto s = parse_segment(m.graph(), cfg.segment);
  const auto r = parse_segment(m.graph(), cfg.segment2);
  const std::size_t window = cfg.window.value_or(2 * cfg.radius);

  CupOptions opt;
  opt.radius = cfg.radius;
  opt.workers = cfg.workers;
  opt.run_anyway = cfg.run_anyway;
  opt.budget = cfg.budget;
  const CupReport c = cup_vanishing_report(m, s, r, opt);

  json& res = rep.results;
  res["segment"] = format_word(m.graph(), s.word);
  res["segment2"] = format_word(m.graph(), r.word);
  json pairs = json::array();
  for (const auto& p : c.hypothesis.pairs)
    pairs.push_back({{"s", m.graph().name(p.s_gen)},
                     {"r", m.graph().name(p.r_gen)},
                     {"adjacent", p.adjacent}});
  res["hypothesis"] = {{"holds", c.hypothesis.holds}, {"pairs", pairs}};
  rep.verdicts["hypothesis"] = c.hypothesis.holds;
  if (!c.scanned)
    return rep;

  res["ball_size"] = c.ball_size;
  json ex = {{"tuples", c.tuples}, {"failures", c.failures}};
  if (c.first_failure)
    ex["first_failure"] = *c.first_failure;
  res["exactness"] = ex;
  res["beta_tuples"] = c.beta_tuples;
  res["beta_sup_scanned"] = to_string(c.beta_sup);
  res["kappa_sup_scanned"] = to_string(c.kappa_sup);
  res["bound"] = c.bound ? json(to_string(*c.bound)) : json(nullptr);
  res["bound_respected"] = c.bound_respected;
  res["note"] = "scanned supremum (lower bound of true sup)";
  rep.verdicts["exactness"] = c.failures == 0;
  if (c.bound)
    rep.verdicts["bound"] = c.bound_respected;

  const HeadConstancyReport hc = head_constancy(m, s, r, cfg.radius, window);
  json h = {{"translates", hc.translates}, {"checks", hc.checks}, {"window", hc.window}};
  if (hc.counterexample) {
    const auto& w = *hc.counterexample;
    h["counterexample"] = {{"at_head", w.at_head}, {"p", w.p.str()}, {"q", w.q.str()},
                           {"x", w.x.str()}, {"value_p", w.value_p},
                           {"value_q", w.value_q}};
  }
  res["head_constancy"] = h;
  rep.verdicts["head_constancy"] = !hc.counterexample.has_value();
  return rep;
}

Report cmd_witness(const RunConfig& cfg) {
  Report rep;
  LoadedModel lm = load_model(cfg.model_doc);
  const RaagModel& m = need_raag(lm, "witness");
  const DefiningGraph& g = m.graph();
  rep.model = model_json(lm);
  json& res = rep.results;
  res["mode"] = cfg.mode;
  const long N = cfg.n_max;

  if (cfg.mode == "separating") {
    const GeneratorSet f = generator_set(g, split_names(cfg.subset));
    const Word w = parse_word(g, cfg.segment);
    SeparatingWitness sw;
    try {
      sw = separating_witness(g, f, w);
    } catch (const HypothesisFailure& e) {
      res["hypothesis_failure"] = e.what();
      rep.verdicts["hypothesis"] = false;
      return rep;
    }
    rep.verdicts["hypothesis"] = true;
    res["v"] = g.name(sw.v);
    res["v_prime"] = g.name(sw.v_prime);
    res["k"] = sw.k;
    res["w_tilde"] = format_word(g, sw.w_tilde);
    res["w1"] = format_word(g, sw.w1);
    res["w2"] = format_word(g, sw.w2);
    res["w_prime"] = format_word(g, sw.w_prime);
    const auto s = make_segment(g, w);
    const Trace x = m.identity();
    const Trace wp = reduce(g, sw.w_prime);
    json rows = json::array();
    bool zero = true, grows = true;
    for (long n = 1; n <= N; ++n) {
      const Trace p = power(wp, n);
      const long fv = f_s_x(m, s, x, p);
      const long hv = brooks_big(w, retract(p.word(), f));
      zero = zero && fv == 0;
      grows = grows && hv >= n - 1;
      rows.push_back({{"n", n}, {"f_s_x", fv}, {"H_w_retract", hv}});
    }
    res["series"] = rows;
    rep.verdicts["median_vanishes"] = zero;
    rep.verdicts["brooks_grows"] = grows;
  } else if (cfg.mode == "nested") {
    const Trace gamma = parse_trace(g, cfg.gamma);
    const Trace x = m.identity();
    GammaNested gn;
    try {
      gn = max_gamma_nested_segment(m, gamma, x);
    } catch (const HypothesisFailure& e) {
      res["hypothesis_failure"] = e.what();
      rep.verdicts["hypothesis"] = false;
      return rep;
    }
    res["gamma"] = gamma.str();
    res["labels"] = format_word(g, gn.labels);
    res["chain"] = chain_json(m, gn.halfspaces);
    res["realizable"] = gn.realizable;
    rep.verdicts["segment_found"] = gn.segment.has_value();
    if (!gn.segment)
      return rep;
    json rows = json::array();
    bool ok = true;
    for (long n = 1; n <= N; ++n) {
      const long fv = f_s(m, *gn.segment, x, multiply(power(gamma, n), x));
      ok = ok && fv >= n;
      rows.push_back({{"n", n}, {"f_s", fv}});
    }
    res["series"] = rows;
    rep.verdicts["at_least_n"] = ok;
  } else if (cfg.mode == "distance") {
    if (g.edge_count() != 0)
      throw DomainError("witness distance: requires a free group");
    const Word w = parse_word(g, cfg.segment);
    const Word w2 = parse_word(g, cfg.segment2);
    const auto bw = brooks_distance_witness(static_cast<int>(g.size()), w, w2);
    res["a"] = format_word(g, Word{bw.a});
    res["b"] = format_word(g, Word{bw.b});
    res["k"] = bw.k;
    res["witness"] = format_word(g, bw.witness);
    const Trace W = reduce(g, bw.witness);
    json rows = json::array();
    bool positive = true, separates = true;
    long last_gap = -1;
    for (long n = 1; n <= N; ++n) {
      const Word p = power(W, n).word();
      const long h1 = brooks_big(w, p), h2 = brooks_big(w2, p);
      positive = positive && h1 > 0;
      separates = separates && std::labs(h1 - h2) > last_gap;
      last_gap = std::labs(h1 - h2);
      rows.push_back({{"n", n}, {"H_w", h1}, {"H_w2", h2}});
    }
    res["series"] = rows;
    rep.verdicts["positive"] = positive;
    rep.verdicts["gap_grows"] = separates;
  } else {
    throw DomainError("witness: --mode must be separating, nested or distance");
  }
  return rep;
}

Report cmd_staircase(const RunConfig& cfg) {
  Report rep;
  LoadedModel lm = load_model(cfg.model_doc);
  rep.model = model_json(lm);
  json& res = rep.results;
  auto fill = [&](const auto& m, const auto& result) {
    res["length"] = result.length;
    res["reached_bound"] = result.reached_bound;
    res["halfspaces"] = result.halfspaces;
    res["h_chain"] = chain_json(m, result.h_chain);
    res["k_chain"] = chain_json(m, result.k_chain);
  };
  res["search_bound"] = cfg.bound;
  if (lm.raag) {
    const RaagModel& m = *lm.raag;
    const auto ball = m.ball(m.identity(), cfg.radius);
    res["region"] = "ball";
    res["ball_size"] = ball.size();
    const auto result = staircase_search(m, region_halfspaces(m, ball), cfg.bound);
    fill(m, result);
    if (lm.sigma_source == "declared" || lm.sigma_source == "edgeless")
      rep.verdicts["within_sigma"] = result.length <= *m.staircase_bound();
  } else if (lm.stair) {
    const StaircaseModel& m = *lm.stair;
    res["region"] = "box";
    res["box_side"] = cfg.radius + 1;
    fill(m, staircase_search(m, m.box_halfspaces(static_cast<long>(cfg.radius) + 1),
                             cfg.bound));
  } else {
    const WedgeModel& m = *lm.wedge;
    res["region"] = "all";
    fill(m, staircase_search(m, m.halfspaces(), cfg.bound));
  }
  return rep;
}

Report run_command(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  try {
    if (cfg.command == "brooks")
      rep = cmd_brooks(cfg);
    else if (cfg.command == "defect")
      rep = cmd_defect(cfg);
    else if (cfg.command == "cup")
      rep = cmd_cup(cfg);
    else if (cfg.command == "witness")
      rep = cmd_witness(cfg);
    else if (cfg.command == "staircase")
      rep = cmd_staircase(cfg);
    else
      throw DomainError("unknown command '" + cfg.command + "'");
  } catch (const BudgetExceeded& e) {
    rep.complete = false;
    rep.error = e.what();
  }
  rep.config = config_json(cfg);
  rep.config_hash = config_hash(cfg);
  rep.runtime_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

} // namespace mqm
