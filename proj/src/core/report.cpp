#include "irrlab/report.hpp"

#include <json.hpp>
#include <sstream>

#include "irrlab/error.hpp"

namespace irrlab {

using Json = nlohmann::ordered_json;

namespace {

Json integer(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

Json rational(const Rational& q) {
  return Json{{"num", integer(boost::multiprecision::numerator(q))},
              {"den", integer(boost::multiprecision::denominator(q))}};
}

Json number(const std::optional<Number>& v) {
  if (!v) return nullptr;
  if (v->is_exact()) {
    Json j = rational(v->exact());
    j["decimal"] = v->decimal();
    return j;
  }
  Json j{{"approx", to_decimal(v->approx(), 30)}, {"decimal", v->decimal()}};
  if (v->is_radical()) j["sqrt"] = Json{{"coef", rational(v->radical().first)}, {"radicand", rational(v->radical().second)}};
  return j;
}

Json params(const ClaimParams& p) {
  Json j = Json::object();
  j["alpha"] = p.alpha ? Json(*p.alpha) : Json(nullptr);
  j["p"] = p.p ? Json(*p.p) : Json(nullptr);
  return j;
}

Json parts(const std::optional<std::pair<int, int>>& p) {
  if (!p) return nullptr;
  return Json::array({p->first, p->second});
}

Json outcome(const ClaimOutcome& o) {
  Json j;
  j["claim"] = o.claim;
  j["part"] = o.part;
  j["subject"] = o.subject;
  j["subject_kind"] = o.subject_is_class ? "class" : "graph";
  j["parts"] = parts(o.parts);
  j["params"] = params(o.params);
  j["lhs"] = number(o.lhs);
  j["relation"] = std::string(to_string(o.relation));
  j["rhs"] = number(o.rhs);
  j["verdict"] = std::string(to_string(o.verdict));
  if (o.witness) {
    j["witness"] = Json{{"graph6", o.witness->graph6}, {"parts", parts(o.witness->parts)},
                        {"params", params(o.witness->params)}};
  } else {
    j["witness"] = nullptr;
  }
  j["interpreted"] = o.interpreted;
  j["note"] = o.note;
  return j;
}

Json counts(const VerdictCounts& c) {
  return Json{{"holds", c.holds}, {"fails", c.fails}, {"na", c.na}, {"marginal", c.marginal}};
}

Json witnesses(const std::vector<ExtremalWitness>& ws) {
  Json arr = Json::array();
  for (const auto& w : ws) {
    arr.push_back(Json{{"graph6", w.graph6}, {"certificate", w.certificate ? Json(w.certificate->hex()) : Json()}});
  }
  return arr;
}

std::string_view param_space_name(ParamSpace s) {
  switch (s) {
    case ParamSpace::kNone: return "none";
    case ParamSpace::kAlpha: return "1 <= alpha <= Delta-3";
    case ParamSpace::kAlphaP: return "1 <= p <= alpha <= Delta-3";
    case ParamSpace::kAlphaPToMax: return "1 <= p <= alpha <= Delta, 2 Delta != 3p";
  }
  return "?";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<ExtremalWitness>& ws) {
  std::string out;
  for (const auto& w : ws) {
    if (!out.empty()) out += ';';
    out += w.graph6;
  }
  return out;
}

std::optional<std::pair<int, int>> parts_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return std::pair{j.at(0).get<int>(), j.at(1).get<int>()};
}

ClaimParams params_from(const Json& j) {
  ClaimParams p;
  if (j.contains("alpha") && !j["alpha"].is_null()) p.alpha = j["alpha"].get<int>();
  if (j.contains("p") && !j["p"].is_null()) p.p = j["p"].get<int>();
  return p;
}

Verdict verdict_from(const std::string& s) {
  for (Verdict v : {Verdict::kHolds, Verdict::kFails, Verdict::kNotApplicable, Verdict::kMarginal}) {
    if (to_string(v) == s) return v;
  }
  throw Error(ErrorCode::kInvalidParams, "unknown verdict '" + s + "'");
}

}  // namespace

std::string bundle_to_json(const InvariantBundle& b) {
  Json j;
  j["n"] = b.n;
  j["m"] = b.m;
  j["min_degree"] = b.min_degree;
  j["max_degree"] = b.max_degree;
  j["irr"] = b.irr;
  j["sigma"] = b.sigma;
  j["irr_t"] = b.irr_t;
  j["m1"] = b.m1;
  j["m2"] = b.m2;
  j["sigma2"] = b.sigma2 ? Json(*b.sigma2) : Json(nullptr);
  j["deg_ave"] = rational(b.deg_ave);
  return j.dump();
}

std::string report_to_json(const Report& r) {
  Json run;
  run["corpus"] = r.run.corpus;
  run["claims"] = r.run.claims;
  run["seed"] = r.run.seed;
  run["version"] = r.run.version;
  run["timestamp"] = r.run.timestamp;
  run["reading"] = r.run.per_graph_reading ? "per_graph" : "class";
  run["sigma2"] = r.run.sigma2_mode == Sigma2Mode::kLiteral ? "literal" : "standard";
  run["note"] = "HOLDS means no counterexample in this finite corpus; it is not a proof";

  Json outcomes = Json::array();
  for (const auto& o : r.outcomes) outcomes.push_back(outcome(o));

  Json extremal = Json::array();
  for (const auto& e : r.extremal) {
    extremal.push_back(Json{{"class", e.cls.description()},
                            {"index", std::string(to_string(e.index))},
                            {"count", e.count},
                            {"min", e.min_value},
                            {"max", e.max_value},
                            {"min_witnesses", witnesses(e.min_witnesses)},
                            {"max_witnesses", witnesses(e.max_witnesses)}});
  }

  Json summaries = Json::array();
  for (const auto& s : r.claim_summaries) {
    Json j{{"claim", s.claim}, {"subject", s.subject}, {"verdict", std::string(to_string(s.counts.overall()))}};
    j.update(counts(s.counts));
    summaries.push_back(j);
  }

  Json doc;
  doc["run"] = run;
  doc["outcomes"] = outcomes;
  doc["extremal"] = extremal;
  doc["summary"] = counts(r.summary);
  doc["claim_summaries"] = summaries;
  return doc.dump(2) + "\n";
}

std::string report_to_csv(const Report& r) {
  std::ostringstream out;
  out << "claim,subject,verdict,holds,fails,na,marginal\n";
  for (const auto& s : r.claim_summaries) {
    out << s.claim << ',' << csv_field(s.subject) << ',' << to_string(s.counts.overall()) << ',' << s.counts.holds
        << ',' << s.counts.fails << ',' << s.counts.na << ',' << s.counts.marginal << '\n';
  }
  return out.str();
}

std::string extremal_csv_header() { return "class,index,count,min,max,min_witnesses,max_witnesses\n"; }

std::string extremal_to_csv_row(const ExtremalResult& e) {
  std::ostringstream out;
  out << csv_field(e.cls.description()) << ',' << to_string(e.index) << ',' << e.count << ',' << e.min_value << ','
      << e.max_value << ',' << csv_field(join(e.min_witnesses)) << ',' << csv_field(join(e.max_witnesses)) << '\n';
  return out.str();
}

std::string catalogue_to_json() {
  Json arr = Json::array();
  for (const auto& c : registry()) {
    Json kinds = Json::array();
    for (ClassKind k : c.class_kinds) {
      switch (k) {
        case ClassKind::kTrees: kinds.push_back("trees"); break;
        case ClassKind::kTreesMaxDegree: kinds.push_back("trees_maxdeg"); break;
        case ClassKind::kBipartite: kinds.push_back("bipartite"); break;
        case ClassKind::kConnected: kinds.push_back("connected"); break;
        case ClassKind::kRandom: kinds.push_back("random"); break;
      }
    }
    arr.push_back(Json{{"id", c.id},
                       {"anchor", c.source},
                       {"statement", c.statement},
                       {"kind", std::string(to_string(c.kind))},
                       {"guard", c.guard},
                       {"parameters", std::string(param_space_name(c.param_space))},
                       {"parts", c.parts},
                       {"classes", kinds},
                       {"interpretation", c.interpretation}});
  }
  return arr.dump(2) + "\n";
}

std::vector<ClaimOutcome> outcomes_from_json(std::string_view text) {
  std::vector<ClaimOutcome> out;
  try {
    const Json doc = Json::parse(text);
    for (const auto& j : doc.at("outcomes")) {
      ClaimOutcome o;
      o.claim = j.at("claim").get<std::string>();
      o.part = j.at("part").get<std::string>();
      o.subject = j.at("subject").get<std::string>();
      o.subject_is_class = j.at("subject_kind").get<std::string>() == "class";
      o.parts = parts_from(j.at("parts"));
      o.params = params_from(j.at("params"));
      o.verdict = verdict_from(j.at("verdict").get<std::string>());
      o.interpreted = j.value("interpreted", false);
      o.note = j.value("note", std::string());
      const Json& w = j.at("witness");
      if (!w.is_null()) {
        o.witness = Witness{w.at("graph6").get<std::string>(), parts_from(w.at("parts")), params_from(w.at("params"))};
      }
      out.push_back(std::move(o));
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kInvalidParams, std::string("malformed report: ") + e.what());
  }
  return out;
}

}  // namespace irrlab
