#include "fgcover/io.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "fgcover/error.hpp"

namespace fgc::io {

namespace {

// ---------------------------------------------------------------------------
// Source positions of JSON values, keyed by JSON pointer.

struct Pos {
  std::size_t line = 0;
  std::size_t column = 0;
};

Pos position_of(std::string_view text, std::size_t offset) {
  Pos p{1, 1};
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

// Assumes `text` is valid JSON (it has already been parsed).
class Locator {
public:
  explicit Locator(std::string_view text) : text_(text) {
    skip_ws();
    value("");
  }

  Pos find(std::string path) const {
    while (true) {
      auto it = at_.find(path);
      if (it != at_.end()) return position_of(text_, it->second);
      if (path.empty()) return {};
      path.erase(path.rfind('/'));
    }
  }

private:
  void skip_ws() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }

  std::string string_token() {
    std::string out;
    ++i_;  // opening quote
    while (i_ < text_.size() && text_[i_] != '"') {
      if (text_[i_] == '\\') ++i_;
      if (i_ < text_.size()) out.push_back(text_[i_++]);
    }
    ++i_;
    return out;
  }

  void value(const std::string& path) {
    at_[path] = i_;
    if (i_ >= text_.size()) return;
    const char c = text_[i_];
    if (c == '{') {
      ++i_;
      skip_ws();
      while (i_ < text_.size() && text_[i_] != '}') {
        const std::string key = string_token();
        skip_ws();
        ++i_;  // colon
        skip_ws();
        value(path + "/" + key);
        skip_ws();
        if (i_ < text_.size() && text_[i_] == ',') ++i_;
        skip_ws();
      }
      ++i_;
    } else if (c == '[') {
      ++i_;
      skip_ws();
      for (std::size_t k = 0; i_ < text_.size() && text_[i_] != ']'; ++k) {
        value(path + "/" + std::to_string(k));
        skip_ws();
        if (i_ < text_.size() && text_[i_] == ',') ++i_;
        skip_ws();
      }
      ++i_;
    } else if (c == '"') {
      string_token();
    } else {
      while (i_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[i_])) && text_[i_] != ',' &&
             text_[i_] != ']' && text_[i_] != '}')
        ++i_;
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  std::map<std::string, std::size_t> at_;
};

class Doc {
public:
  explicit Doc(std::string_view text) : text_(text) {
    try {
      json_ = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
      const Pos p = position_of(text, e.byte == 0 ? 0 : e.byte - 1);
      throw ParseError("malformed JSON: " + std::string(e.what()), p.line, p.column);
    }
    locator_.emplace(text);
  }

  const Json& root() const { return json_; }

  [[noreturn]] void fail(const std::string& path, const std::string& message) const {
    const Pos p = locator_->find(path);
    throw ParseError((path.empty() ? std::string("document") : path) + ": " + message, p.line, p.column);
  }

  const Json& field(const Json& obj, const std::string& path, const char* key) const {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing key \"") + key + "\"");
    return *it;
  }

  const Json* optional_field(const Json& obj, const std::string& path, const char* key) const {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    return it == obj.end() || it->is_null() ? nullptr : &*it;
  }

  long integer(const Json& j, const std::string& path) const {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long>();
  }

  std::size_t count(const Json& j, const std::string& path) const {
    const long v = integer(j, path);
    if (v < 0) fail(path, "expected a nonnegative integer");
    return static_cast<std::size_t>(v);
  }

  bool boolean(const Json& j, const std::string& path) const {
    if (!j.is_boolean()) fail(path, "expected true or false");
    return j.get<bool>();
  }

  const std::string& string(const Json& j, const std::string& path) const {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get_ref<const std::string&>();
  }

  const Json& array(const Json& j, const std::string& path) const {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
  }

  GroupWord word(const Json& j, const std::string& path, int rank) const {
    const std::string& s = string(j, path);
    try {
      return parse_word(s, rank);
    } catch (const ParseError& e) {
      fail(path, e.what());
    } catch (const InvalidLetter& e) {
      fail(path, e.what());
    }
  }

  mpz_class big(const Json& j, const std::string& path) const {
    const std::string& s = string(j, path);
    mpz_class z;
    if (s.empty() || z.set_str(s, 10) != 0) fail(path, "expected a decimal integer string");
    return z;
  }

  mpq_class rational(const Json& j, const std::string& path) const {
    const std::string& s = string(j, path);
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) fail(path, "expected a rational string p/q");
    q.canonicalize();
    return q;
  }

private:
  std::string_view text_;
  Json json_;
  std::optional<Locator> locator_;
};

std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }
std::string at(const std::string& path, const char* key) { return path + "/" + key; }

// ---------------------------------------------------------------------------
// Inputs

int decode_rank(const Doc& doc, const Json& obj, const std::string& path) {
  const long n = doc.integer(doc.field(obj, path, "rank"), at(path, "rank"));
  if (n < 1) doc.fail(at(path, "rank"), "rank must be >= 1");
  if (n > 1'000'000) doc.fail(at(path, "rank"), "rank too large");
  return static_cast<int>(n);
}

std::shared_ptr<const SchreierGraph> decode_subgroup(const Doc& doc, const Json& obj, const std::string& path,
                                                     std::optional<int> inherited) {
  if (!obj.is_object()) doc.fail(path, "expected a subgroup object");
  int rank;
  if (obj.contains("rank")) {
    rank = decode_rank(doc, obj, path);
    if (inherited && rank != *inherited)
      doc.fail(at(path, "rank"), "rank " + std::to_string(rank) + " differs from the partition rank " +
                                     std::to_string(*inherited));
  } else if (inherited) {
    rank = *inherited;
  } else {
    doc.fail(path, "missing key \"rank\"");
  }

  const bool has_gens = obj.contains("generators");
  const bool has_perms = obj.contains("permutations");
  if (has_gens == has_perms) doc.fail(path, "expected exactly one of \"generators\" and \"permutations\"");

  if (has_gens) {
    const std::string gpath = at(path, "generators");
    const Json& gens = doc.array(obj.at("generators"), gpath);
    std::vector<GroupWord> words;
    for (std::size_t i = 0; i < gens.size(); ++i) words.push_back(doc.word(gens[i], at(gpath, i), rank));
    return std::make_shared<const SchreierGraph>(fold(rank, words));
  }

  const std::string ppath = at(path, "permutations");
  const Json& perms = doc.array(obj.at("permutations"), ppath);
  if (perms.size() != static_cast<std::size_t>(rank))
    doc.fail(ppath, "expected " + std::to_string(rank) + " permutations, got " + std::to_string(perms.size()));
  std::vector<std::vector<Vertex>> images;
  for (std::size_t g = 0; g < perms.size(); ++g) {
    const Json& p = doc.array(perms[g], at(ppath, g));
    if (p.empty()) doc.fail(at(ppath, g), "permutation acts on no points");
    if (g > 0 && p.size() != images[0].size()) doc.fail(at(ppath, g), "permutations act on different point sets");
    std::vector<Vertex> img;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t v = 0; v < p.size(); ++v) {
      const long x = doc.integer(p[v], at(at(ppath, g), v));
      if (x < 1 || static_cast<std::size_t>(x) > p.size())
        doc.fail(at(at(ppath, g), v), "image must lie in 1.." + std::to_string(p.size()));
      if (seen[x - 1]) doc.fail(at(at(ppath, g), v), "image repeated: not a permutation");
      seen[x - 1] = true;
      img.push_back(static_cast<Vertex>(x - 1));
    }
    images.push_back(std::move(img));
  }
  Vertex base = 0;
  if (const Json* b = doc.optional_field(obj, path, "basepoint")) {
    const long x = doc.integer(*b, at(path, "basepoint"));
    if (x < 1 || static_cast<std::size_t>(x) > images[0].size())
      doc.fail(at(path, "basepoint"), "basepoint must lie in 1.." + std::to_string(images[0].size()));
    base = static_cast<Vertex>(x - 1);
  }
  return std::make_shared<const SchreierGraph>(SchreierGraph::from_permutations(rank, images, base));
}

PartitionSpec decode_partition(const Doc& doc, const Json& obj, const std::string& path) {
  PartitionSpec spec;
  spec.rank = decode_rank(doc, obj, path);
  const std::string mpath = at(path, "members");
  const Json& members = doc.array(doc.field(obj, path, "members"), mpath);
  if (members.empty()) doc.fail(mpath, "a partition needs at least one member");
  std::vector<std::shared_ptr<const SchreierGraph>> graphs;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::string p = at(mpath, i);
    auto g = decode_subgroup(doc, doc.field(members[i], p, "subgroup"), at(p, "subgroup"), spec.rank);
    for (const auto& seen : graphs)
      if (*seen == *g) g = seen;
    if (std::find(graphs.begin(), graphs.end(), g) == graphs.end()) graphs.push_back(g);
    GroupWord rep = doc.word(doc.field(members[i], p, "coset_rep"), at(p, "coset_rep"), spec.rank);
    spec.members.push_back(Coset::of(std::move(g), std::move(rep)));
  }
  return spec;
}

ZCoveringSpec decode_z_family(const Doc& doc, const Json& obj, const std::string& path) {
  const std::string mpath = at(path, "moduli");
  const Json& moduli = doc.array(doc.field(obj, path, "moduli"), mpath);
  if (moduli.empty()) doc.fail(mpath, "a family needs at least one residue class");
  std::vector<ResidueClass> classes;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const Json& pair = doc.array(moduli[i], at(mpath, i));
    if (pair.size() != 2) doc.fail(at(mpath, i), "expected [modulus, residue]");
    const long d = doc.integer(pair[0], at(at(mpath, i), std::size_t{0}));
    const long r = doc.integer(pair[1], at(at(mpath, i), std::size_t{1}));
    if (d < 1) doc.fail(at(at(mpath, i), std::size_t{0}), "modulus must be >= 1");
    classes.push_back({d, r});
  }
  return ZCoveringSpec(std::move(classes));
}

// ---------------------------------------------------------------------------
// Value encoders

Json big_json(const mpz_class& z) { return z.get_str(); }

Json series_json(const SeriesPrefix& s) {
  Json out = Json::array();
  for (const auto& z : s) out.push_back(big_json(z));
  return out;
}

SeriesPrefix decode_series(const Doc& doc, const Json& j, const std::string& path) {
  SeriesPrefix out;
  const Json& a = doc.array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(doc.big(a[i], at(path, i)));
  return out;
}

IntPolynomial decode_polynomial(const Doc& doc, const Json& j, const std::string& path) {
  const SeriesPrefix c = decode_series(doc, j, path);
  if (!c.empty() && c.back() == 0) doc.fail(path, "leading coefficient must be nonzero");
  return IntPolynomial(c);
}

RationalFunction decode_ratfunc(const Doc& doc, const Json& j, const std::string& path) {
  IntPolynomial num = decode_polynomial(doc, doc.field(j, path, "num"), at(path, "num"));
  IntPolynomial den = decode_polynomial(doc, doc.field(j, path, "den"), at(path, "den"));
  try {
    return RationalFunction(std::move(num), std::move(den));
  } catch (const std::exception& e) {
    doc.fail(path, e.what());
  }
}

CycloNumber decode_cyclo(const Doc& doc, const Json& j, const std::string& path) {
  const long h = doc.integer(doc.field(j, path, "h"), at(path, "h"));
  if (h < 1) doc.fail(at(path, "h"), "root order must be >= 1");
  const std::string cpath = at(path, "coeffs");
  const Json& a = doc.array(doc.field(j, path, "coeffs"), cpath);
  std::vector<mpq_class> c;
  for (std::size_t i = 0; i < a.size(); ++i) c.push_back(doc.rational(a[i], at(cpath, i)));
  return CycloNumber(static_cast<unsigned>(h), std::move(c));
}

Json index_list(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t i : v) out.push_back(i + 1);
  return out;
}

std::vector<std::size_t> decode_index_list(const Doc& doc, const Json& j, const std::string& path) {
  std::vector<std::size_t> out;
  const Json& a = doc.array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t x = doc.count(a[i], at(path, i));
    if (x == 0) doc.fail(at(path, i), "member numbers are 1-based");
    out.push_back(x - 1);
  }
  return out;
}

std::vector<std::size_t> decode_counts(const Doc& doc, const Json& j, const std::string& path) {
  std::vector<std::size_t> out;
  const Json& a = doc.array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(doc.count(a[i], at(path, i)));
  return out;
}

PartitionStatus decode_status(const Doc& doc, const Json& j, const std::string& path) {
  const std::string& s = doc.string(j, path);
  for (auto st : {PartitionStatus::IsPartition, PartitionStatus::Overlap, PartitionStatus::Gap})
    if (to_string(st) == s) return st;
  doc.fail(path, "unknown partition status \"" + s + "\"");
}

ClauseStatus decode_clause_status(const Doc& doc, const Json& j, const std::string& path) {
  const std::string& s = doc.string(j, path);
  for (auto st : {ClauseStatus::Pass, ClauseStatus::Fail, ClauseStatus::NotApplicable})
    if (to_string(st) == s) return st;
  doc.fail(path, "unknown clause status \"" + s + "\"");
}

// Clause subjects are periods or indices, except for per-member clauses.
bool subject_is_member(const std::string& clause) { return clause == "iii" || clause == "divides-another"; }

Json findings_json(const Findings& f) {
  Json out = Json::array();
  for (const auto& c : f.clauses) {
    Json j;
    j["clause"] = c.clause;
    if (c.subject)
      j["subject"] = subject_is_member(c.clause) ? *c.subject + 1 : *c.subject;
    else
      j["subject"] = nullptr;
    j["status"] = to_string(c.status);
    j["members"] = index_list(c.members);
    j["detail"] = c.detail;
    out.push_back(std::move(j));
  }
  return out;
}

Findings decode_findings(const Doc& doc, const Json& j, const std::string& path) {
  Findings f;
  const Json& a = doc.array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string p = at(path, i);
    ClauseFinding c;
    c.clause = doc.string(doc.field(a[i], p, "clause"), at(p, "clause"));
    if (const Json* s = doc.optional_field(a[i], p, "subject"))
      c.subject = doc.integer(*s, at(p, "subject")) - (subject_is_member(c.clause) ? 1 : 0);
    c.status = decode_clause_status(doc, doc.field(a[i], p, "status"), at(p, "status"));
    c.members = decode_index_list(doc, doc.field(a[i], p, "members"), at(p, "members"));
    c.detail = doc.string(doc.field(a[i], p, "detail"), at(p, "detail"));
    f.clauses.push_back(std::move(c));
  }
  return f;
}

Json verdict_json(const PartitionVerdict& v, int rank) {
  Json j;
  j["status"] = to_string(v.status);
  j["witness"] = v.witness ? Json(format_word(*v.witness, rank)) : Json(nullptr);
  j["overlap"] = v.overlap ? Json::array({v.overlap->first + 1, v.overlap->second + 1}) : Json(nullptr);
  j["states_explored"] = v.states_explored;
  return j;
}

PartitionVerdict decode_verdict(const Doc& doc, const Json& j, const std::string& path, int rank) {
  PartitionVerdict v;
  v.status = decode_status(doc, doc.field(j, path, "status"), at(path, "status"));
  if (const Json* w = doc.optional_field(j, path, "witness")) v.witness = doc.word(*w, at(path, "witness"), rank);
  if (const Json* o = doc.optional_field(j, path, "overlap")) {
    const auto pair = decode_index_list(doc, *o, at(path, "overlap"));
    if (pair.size() != 2) doc.fail(at(path, "overlap"), "expected two member numbers");
    v.overlap = std::make_pair(pair[0], pair[1]);
  }
  v.states_explored = doc.count(doc.field(j, path, "states_explored"), at(path, "states_explored"));
  return v;
}

Json complex_json(std::complex<double> c) { return Json::array({c.real(), c.imag()}); }

std::complex<double> decode_complex(const Doc& doc, const Json& j, const std::string& path) {
  const Json& a = doc.array(j, path);
  if (a.size() != 2 || !a[0].is_number() || !a[1].is_number()) doc.fail(path, "expected [re, im]");
  return {a[0].get<double>(), a[1].get<double>()};
}

// ---------------------------------------------------------------------------
// Reports

Json analysis_json(const AnalysisReport& r) {
  const int n = r.spec.rank;
  Json j;
  j["kind"] = "partition-analysis";
  j["rank"] = n;
  j["series_depth"] = r.series_depth;
  j["spec"] = partition_to_json(r.spec);
  Json verdict = verdict_json(r.verdict, n);
  verdict["certified"] = r.witness_certified;
  j["verdict"] = std::move(verdict);

  Json members = Json::array();
  for (std::size_t i = 0; i < r.members.size(); ++i) {
    const MemberData& m = r.members[i];
    Json e;
    e["member"] = i + 1;
    e["index"] = m.index;
    e["period"] = m.period;
    e["char_poly"] = to_json(m.char_poly);
    e["zero_multiplicity"] = m.zero_multiplicity;
    e["genfunc"] = to_json(m.genfunc);
    members.push_back(std::move(e));
  }
  j["members"] = std::move(members);

  if (r.sum_identity)
    j["sum_identity"] = {{"holds", r.sum_identity->holds}, {"residual", to_json(r.sum_identity->residual)}};
  else
    j["sum_identity"] = nullptr;
  if (r.coefficient_identity) {
    const auto& c = *r.coefficient_identity;
    j["coefficient_identity"] = {{"holds", c.holds},
                                 {"first_failure", c.first_failure ? Json(*c.first_failure) : Json(nullptr)},
                                 {"totals", series_json(c.totals)}};
  } else {
    j["coefficient_identity"] = nullptr;
  }
  j["theorem1"] = r.theorem1 ? findings_json(*r.theorem1) : Json(nullptr);
  j["theorem2"] = r.theorem2 ? findings_json(*r.theorem2) : Json(nullptr);

  Json residues = Json::array();
  for (const auto& e : r.residues) {
    Json x;
    x["h"] = e.sum.h;
    x["m"] = e.sum.m;
    x["value"] = to_json(e.sum.value);
    x["zero"] = e.zero;
    x["attainers"] = index_list(e.sum.attainers);
    x["numeric"] = e.numeric ? complex_json(*e.numeric) : Json(nullptr);
    residues.push_back(std::move(x));
  }
  j["residues"] = std::move(residues);

  Json poles = Json::array();
  for (const auto& c : r.pole_classes) {
    Json x;
    x["factor"] = to_json(c.factor);
    x["attainers"] = index_list(c.attainers);
    x["orders"] = c.orders;
    x["zero_multiplicities"] = c.zero_multiplicities
                                   ? Json::array({c.zero_multiplicities->first, c.zero_multiplicities->second})
                                   : Json(nullptr);
    x["assertion_emitted"] = c.assertion_emitted;
    x["indices_equal"] = c.indices_equal;
    poles.push_back(std::move(x));
  }
  j["pole_classes"] = std::move(poles);

  if (r.oracle) {
    const OracleReport& o = *r.oracle;
    Json x;
    x["count_depth"] = o.count_depth;
    Json counts = Json::array();
    for (const auto& c : o.counts) counts.push_back(series_json(c));
    x["counts"] = std::move(counts);
    x["counts_agree"] = o.counts_agree;
    Json periods = Json::array();
    for (const auto& p : o.cycle_periods) periods.push_back(p ? Json(*p) : Json(nullptr));
    x["cycle_periods"] = std::move(periods);
    x["periods_agree"] = o.periods_agree;
    x["word_length"] = o.word_length;
    x["words"] = verdict_json(o.words, n);
    x["words_agree"] = o.words_agree;
    j["oracle"] = std::move(x);
  } else {
    j["oracle"] = nullptr;
  }
  j["theorems_hold"] = r.theorems_hold();
  return j;
}

AnalysisReport decode_analysis(const Doc& doc, const Json& j, const std::string& path) {
  AnalysisReport r;
  r.spec = decode_partition(doc, doc.field(j, path, "spec"), at(path, "spec"));
  const int n = r.spec.rank;
  r.series_depth = doc.count(doc.field(j, path, "series_depth"), at(path, "series_depth"));
  const std::string vpath = at(path, "verdict");
  const Json& v = doc.field(j, path, "verdict");
  r.verdict = decode_verdict(doc, v, vpath, n);
  r.witness_certified = doc.boolean(doc.field(v, vpath, "certified"), at(vpath, "certified"));

  const std::string mpath = at(path, "members");
  const Json& members = doc.array(doc.field(j, path, "members"), mpath);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::string p = at(mpath, i);
    MemberData m;
    m.index = doc.count(doc.field(members[i], p, "index"), at(p, "index"));
    m.period = static_cast<unsigned>(doc.count(doc.field(members[i], p, "period"), at(p, "period")));
    m.char_poly = decode_polynomial(doc, doc.field(members[i], p, "char_poly"), at(p, "char_poly"));
    m.zero_multiplicity = doc.count(doc.field(members[i], p, "zero_multiplicity"), at(p, "zero_multiplicity"));
    m.genfunc = decode_ratfunc(doc, doc.field(members[i], p, "genfunc"), at(p, "genfunc"));
    r.members.push_back(std::move(m));
  }

  if (const Json* s = doc.optional_field(j, path, "sum_identity")) {
    const std::string p = at(path, "sum_identity");
    r.sum_identity = SumIdentity{doc.boolean(doc.field(*s, p, "holds"), at(p, "holds")),
                                 decode_ratfunc(doc, doc.field(*s, p, "residual"), at(p, "residual"))};
  }
  if (const Json* c = doc.optional_field(j, path, "coefficient_identity")) {
    const std::string p = at(path, "coefficient_identity");
    CoefficientIdentity ci;
    ci.holds = doc.boolean(doc.field(*c, p, "holds"), at(p, "holds"));
    if (const Json* f = doc.optional_field(*c, p, "first_failure")) ci.first_failure = doc.count(*f, at(p, "first_failure"));
    ci.totals = decode_series(doc, doc.field(*c, p, "totals"), at(p, "totals"));
    r.coefficient_identity = std::move(ci);
  }
  if (const Json* f = doc.optional_field(j, path, "theorem1")) r.theorem1 = decode_findings(doc, *f, at(path, "theorem1"));
  if (const Json* f = doc.optional_field(j, path, "theorem2")) r.theorem2 = decode_findings(doc, *f, at(path, "theorem2"));

  const std::string rpath = at(path, "residues");
  const Json& residues = doc.array(doc.field(j, path, "residues"), rpath);
  for (std::size_t i = 0; i < residues.size(); ++i) {
    const std::string p = at(rpath, i);
    const Json& x = residues[i];
    ResidueEntry e;
    e.sum.h = static_cast<unsigned>(doc.count(doc.field(x, p, "h"), at(p, "h")));
    e.sum.m = doc.integer(doc.field(x, p, "m"), at(p, "m"));
    e.sum.value = decode_cyclo(doc, doc.field(x, p, "value"), at(p, "value"));
    e.zero = doc.boolean(doc.field(x, p, "zero"), at(p, "zero"));
    e.sum.attainers = decode_index_list(doc, doc.field(x, p, "attainers"), at(p, "attainers"));
    if (const Json* c = doc.optional_field(x, p, "numeric")) e.numeric = decode_complex(doc, *c, at(p, "numeric"));
    r.residues.push_back(std::move(e));
  }

  const std::string ppath = at(path, "pole_classes");
  const Json& poles = doc.array(doc.field(j, path, "pole_classes"), ppath);
  for (std::size_t i = 0; i < poles.size(); ++i) {
    const std::string p = at(ppath, i);
    const Json& x = poles[i];
    PoleClass c;
    c.factor = decode_polynomial(doc, doc.field(x, p, "factor"), at(p, "factor"));
    c.attainers = decode_index_list(doc, doc.field(x, p, "attainers"), at(p, "attainers"));
    c.orders = decode_counts(doc, doc.field(x, p, "orders"), at(p, "orders"));
    if (const Json* z = doc.optional_field(x, p, "zero_multiplicities")) {
      const auto pair = decode_counts(doc, *z, at(p, "zero_multiplicities"));
      if (pair.size() != 2) doc.fail(at(p, "zero_multiplicities"), "expected two multiplicities");
      c.zero_multiplicities = std::make_pair(pair[0], pair[1]);
    }
    c.assertion_emitted = doc.boolean(doc.field(x, p, "assertion_emitted"), at(p, "assertion_emitted"));
    c.indices_equal = doc.boolean(doc.field(x, p, "indices_equal"), at(p, "indices_equal"));
    r.pole_classes.push_back(std::move(c));
  }

  if (const Json* o = doc.optional_field(j, path, "oracle")) {
    const std::string p = at(path, "oracle");
    OracleReport x;
    x.count_depth = doc.count(doc.field(*o, p, "count_depth"), at(p, "count_depth"));
    const Json& counts = doc.array(doc.field(*o, p, "counts"), at(p, "counts"));
    for (std::size_t i = 0; i < counts.size(); ++i) x.counts.push_back(decode_series(doc, counts[i], at(at(p, "counts"), i)));
    x.counts_agree = doc.boolean(doc.field(*o, p, "counts_agree"), at(p, "counts_agree"));
    const Json& periods = doc.array(doc.field(*o, p, "cycle_periods"), at(p, "cycle_periods"));
    for (std::size_t i = 0; i < periods.size(); ++i) {
      if (periods[i].is_null())
        x.cycle_periods.push_back(std::nullopt);
      else
        x.cycle_periods.push_back(static_cast<unsigned>(doc.count(periods[i], at(at(p, "cycle_periods"), i))));
    }
    x.periods_agree = doc.boolean(doc.field(*o, p, "periods_agree"), at(p, "periods_agree"));
    x.word_length = doc.count(doc.field(*o, p, "word_length"), at(p, "word_length"));
    x.words = decode_verdict(doc, doc.field(*o, p, "words"), at(p, "words"), n);
    x.words_agree = doc.boolean(doc.field(*o, p, "words_agree"), at(p, "words_agree"));
    r.oracle = std::move(x);
  }
  return r;
}

Json matrix_json(const TransitionMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.dimension(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

TransitionMatrix decode_matrix(const Doc& doc, const Json& j, const std::string& path) {
  const Json& rows = doc.array(j, path);
  std::vector<std::int64_t> entries;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Json& row = doc.array(rows[i], at(path, i));
    if (row.size() != rows.size()) doc.fail(at(path, i), "matrix must be square");
    for (std::size_t k = 0; k < row.size(); ++k) entries.push_back(doc.integer(row[k], at(at(path, i), k)));
  }
  return TransitionMatrix(rows.size(), std::move(entries));
}

Json subgroup_report_json(const SubgroupReport& r) {
  const SchreierGraph& g = *r.graph;
  Json j;
  j["kind"] = "subgroup-analysis";
  j["rank"] = g.rank();
  j["index"] = g.index();
  j["period"] = r.period;
  j["subgroup"] = subgroup_to_json(g);
  j["matrix"] = matrix_json(r.matrix);
  j["char_poly"] = to_json(r.char_poly);
  j["zero_multiplicity"] = r.zero_multiplicity;
  Json cosets = Json::array();
  for (Vertex v = 0; v < g.index(); ++v) {
    Json c;
    c["coset"] = v + 1;
    c["transversal"] = format_word(r.transversal.reps[v], g.rank());
    c["genfunc"] = to_json(r.genfuncs[v]);
    c["series"] = series_json(r.series[v]);
    cosets.push_back(std::move(c));
  }
  j["cosets"] = std::move(cosets);
  if (r.oracle) {
    Json o;
    o["count_depth"] = r.oracle->count_depth;
    Json counts = Json::array();
    for (const auto& c : r.oracle->counts) counts.push_back(series_json(c));
    o["counts"] = std::move(counts);
    o["counts_agree"] = r.oracle->counts_agree;
    o["cycle_period"] = r.oracle->cycle_period ? Json(*r.oracle->cycle_period) : Json(nullptr);
    o["period_agrees"] = r.oracle->period_agrees;
    j["oracle"] = std::move(o);
  } else {
    j["oracle"] = nullptr;
  }
  return j;
}

PositiveWord decode_positive(const Doc& doc, const Json& j, const std::string& path, int rank) {
  const GroupWord w = doc.word(j, path, rank);
  if (!w.is_positive()) doc.fail(path, "expected a positive word");
  std::vector<int> gens;
  for (const Letter& l : w.letters()) gens.push_back(l.generator);
  return PositiveWord(std::move(gens));
}

SubgroupReport decode_subgroup_report(const Doc& doc, const Json& j, const std::string& path) {
  SubgroupReport r;
  r.graph = decode_subgroup(doc, doc.field(j, path, "subgroup"), at(path, "subgroup"), std::nullopt);
  const int n = r.graph->rank();
  r.period = static_cast<unsigned>(doc.count(doc.field(j, path, "period"), at(path, "period")));
  r.matrix = decode_matrix(doc, doc.field(j, path, "matrix"), at(path, "matrix"));
  r.char_poly = decode_polynomial(doc, doc.field(j, path, "char_poly"), at(path, "char_poly"));
  r.zero_multiplicity = doc.count(doc.field(j, path, "zero_multiplicity"), at(path, "zero_multiplicity"));
  const std::string cpath = at(path, "cosets");
  const Json& cosets = doc.array(doc.field(j, path, "cosets"), cpath);
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    const std::string p = at(cpath, i);
    r.transversal.reps.push_back(decode_positive(doc, doc.field(cosets[i], p, "transversal"), at(p, "transversal"), n));
    r.genfuncs.push_back(decode_ratfunc(doc, doc.field(cosets[i], p, "genfunc"), at(p, "genfunc")));
    r.series.push_back(decode_series(doc, doc.field(cosets[i], p, "series"), at(p, "series")));
  }
  if (const Json* o = doc.optional_field(j, path, "oracle")) {
    const std::string p = at(path, "oracle");
    SubgroupOracle x;
    x.count_depth = doc.count(doc.field(*o, p, "count_depth"), at(p, "count_depth"));
    const Json& counts = doc.array(doc.field(*o, p, "counts"), at(p, "counts"));
    for (std::size_t i = 0; i < counts.size(); ++i) x.counts.push_back(decode_series(doc, counts[i], at(at(p, "counts"), i)));
    x.counts_agree = doc.boolean(doc.field(*o, p, "counts_agree"), at(p, "counts_agree"));
    if (const Json* c = doc.optional_field(*o, p, "cycle_period"))
      x.cycle_period = static_cast<unsigned>(doc.count(*c, at(p, "cycle_period")));
    x.period_agrees = doc.boolean(doc.field(*o, p, "period_agrees"), at(p, "period_agrees"));
    r.oracle = std::move(x);
  }
  return r;
}

Json z_report_json(const ZAnalysisReport& r) {
  Json j;
  j["kind"] = "z-analysis";
  j["moduli"] = z_family_to_json(r.spec)["moduli"];
  Json v;
  v["status"] = to_string(r.verdict.status);
  v["witness"] = r.verdict.witness ? Json(*r.verdict.witness) : Json(nullptr);
  v["overlap"] = r.verdict.overlap ? Json::array({r.verdict.overlap->first + 1, r.verdict.overlap->second + 1})
                                   : Json(nullptr);
  v["period"] = r.verdict.period;
  j["verdict"] = std::move(v);
  j["davenport_rado"] = r.davenport_rado ? findings_json(*r.davenport_rado) : Json(nullptr);
  j["lifted"] = analysis_json(r.lifted);
  j["lifted_agrees"] = r.lifted_agrees;
  j["holds"] = r.holds();
  return j;
}

ZAnalysisReport decode_z_report(const Doc& doc, const Json& j, const std::string& path) {
  ZAnalysisReport r;
  r.spec = decode_z_family(doc, j, path);
  const std::string vpath = at(path, "verdict");
  const Json& v = doc.field(j, path, "verdict");
  r.verdict.status = decode_status(doc, doc.field(v, vpath, "status"), at(vpath, "status"));
  if (const Json* w = doc.optional_field(v, vpath, "witness")) r.verdict.witness = doc.integer(*w, at(vpath, "witness"));
  if (const Json* o = doc.optional_field(v, vpath, "overlap")) {
    const auto pair = decode_index_list(doc, *o, at(vpath, "overlap"));
    if (pair.size() != 2) doc.fail(at(vpath, "overlap"), "expected two class numbers");
    r.verdict.overlap = std::make_pair(pair[0], pair[1]);
  }
  r.verdict.period = doc.integer(doc.field(v, vpath, "period"), at(vpath, "period"));
  if (const Json* f = doc.optional_field(j, path, "davenport_rado"))
    r.davenport_rado = decode_findings(doc, *f, at(path, "davenport_rado"));
  r.lifted = decode_analysis(doc, doc.field(j, path, "lifted"), at(path, "lifted"));
  r.lifted_agrees = doc.boolean(doc.field(j, path, "lifted_agrees"), at(path, "lifted_agrees"));
  return r;
}

// ---------------------------------------------------------------------------
// Text

std::string ratfunc_text(const RationalFunction& f) {
  const std::string num = f.numerator().to_string('z');
  if (f.denominator() == IntPolynomial{1}) return num;
  return "(" + num + ") / (" + f.denominator().to_string('z') + ")";
}

std::string cyclo_text(const CycloNumber& c) {
  if (c.is_zero()) return "0";
  std::string out;
  const auto coeffs = c.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs[k].get_str() + ")";
    if (k > 0) out += "*w^" + std::to_string(k);
  }
  return out;
}

void findings_text(std::ostream& os, const char* title, const Findings& f, bool member_subjects_only_iii) {
  os << title << ":\n";
  for (const auto& c : f.clauses) {
    os << "  (" << c.clause << ")";
    if (c.subject) {
      const bool member = member_subjects_only_iii && subject_is_member(c.clause);
      os << (member ? " member " : " at ") << (member ? *c.subject + 1 : *c.subject);
    }
    os << ": " << to_string(c.status);
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
}

std::string verdict_text(const PartitionVerdict& v, int rank) {
  std::string out = to_string(v.status);
  if (v.witness) out += ", witness '" + format_word(*v.witness, rank) + "'";
  if (v.overlap)
    out += " in members " + std::to_string(v.overlap->first + 1) + " and " + std::to_string(v.overlap->second + 1);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public interface

InputKind detect_kind(std::string_view text) {
  const Doc doc(text);
  const Json& j = doc.root();
  if (!j.is_object()) doc.fail("", "expected a JSON object");
  if (j.contains("moduli")) return InputKind::ZFamily;
  if (j.contains("members")) return InputKind::Partition;
  if (j.contains("generators") || j.contains("permutations")) return InputKind::Subgroup;
  doc.fail("", "expected one of the keys \"members\", \"moduli\", \"generators\", \"permutations\"");
}

std::shared_ptr<const SchreierGraph> parse_subgroup(std::string_view text) {
  const Doc doc(text);
  return decode_subgroup(doc, doc.root(), "", std::nullopt);
}

PartitionSpec parse_partition(std::string_view text) {
  const Doc doc(text);
  return decode_partition(doc, doc.root(), "");
}

ZCoveringSpec parse_z_family(std::string_view text) {
  const Doc doc(text);
  return decode_z_family(doc, doc.root(), "");
}

Json subgroup_to_json(const SchreierGraph& graph) {
  Json j;
  j["rank"] = graph.rank();
  Json perms = Json::array();
  for (int g = 1; g <= graph.rank(); ++g) {
    Json p = Json::array();
    for (Vertex v = 0; v < graph.index(); ++v) p.push_back(graph.act(v, g) + 1);
    perms.push_back(std::move(p));
  }
  j["permutations"] = std::move(perms);
  j["basepoint"] = SchreierGraph::basepoint() + 1;
  return j;
}

Json partition_to_json(const PartitionSpec& spec, const Json& meta) {
  Json j;
  j["rank"] = spec.rank;
  for (const auto& [k, v] : meta.items()) j[k] = v;
  Json members = Json::array();
  for (const auto& m : spec.members) {
    Json s = subgroup_to_json(*m.graph);
    s.erase("rank");
    members.push_back({{"subgroup", std::move(s)}, {"coset_rep", format_word(m.rep, spec.rank)}});
  }
  j["members"] = std::move(members);
  return j;
}

Json z_family_to_json(const ZCoveringSpec& spec) {
  Json moduli = Json::array();
  for (const auto& c : spec.classes()) moduli.push_back(Json::array({c.modulus, c.residue}));
  return {{"moduli", std::move(moduli)}};
}

Json to_json(const IntPolynomial& p) { return series_json(SeriesPrefix(p.coefficients().begin(), p.coefficients().end())); }

Json to_json(const RationalFunction& f) { return {{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}}; }

Json to_json(const CycloNumber& c) {
  Json coeffs = Json::array();
  for (const auto& q : c.coefficients()) coeffs.push_back(q.get_str());
  return {{"h", c.order()}, {"coeffs", std::move(coeffs)}};
}

namespace {
// Value decoders over an already-parsed fragment.
template <class T, class F>
T decode_fragment(const Json& j, F&& f) {
  const std::string text = j.dump();
  const Doc doc(text);
  return f(doc, doc.root());
}
}  // namespace

IntPolynomial polynomial_from_json(const Json& j) {
  return decode_fragment<IntPolynomial>(j, [](const Doc& d, const Json& r) { return decode_polynomial(d, r, ""); });
}

RationalFunction rational_function_from_json(const Json& j) {
  return decode_fragment<RationalFunction>(j, [](const Doc& d, const Json& r) { return decode_ratfunc(d, r, ""); });
}

CycloNumber cyclo_from_json(const Json& j) {
  return decode_fragment<CycloNumber>(j, [](const Doc& d, const Json& r) { return decode_cyclo(d, r, ""); });
}

Json report_to_json(const AnalysisReport& r) { return analysis_json(r); }
Json report_to_json(const SubgroupReport& r) { return subgroup_report_json(r); }
Json report_to_json(const ZAnalysisReport& r) { return z_report_json(r); }

AnalysisReport analysis_report_from_json(std::string_view text) {
  const Doc doc(text);
  return decode_analysis(doc, doc.root(), "");
}

SubgroupReport subgroup_report_from_json(std::string_view text) {
  const Doc doc(text);
  return decode_subgroup_report(doc, doc.root(), "");
}

ZAnalysisReport z_report_from_json(std::string_view text) {
  const Doc doc(text);
  return decode_z_report(doc, doc.root(), "");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string to_text(const SubgroupReport& r) {
  const SchreierGraph& g = *r.graph;
  std::ostringstream os;
  os << "index " << g.index() << ", period " << r.period << "\n";
  os << "det(I - zA) = " << r.char_poly.to_string('z') << "\n";
  os << "transition matrix:\n";
  for (std::size_t i = 0; i < r.matrix.dimension(); ++i) {
    os << " ";
    for (std::size_t j = 0; j < r.matrix.dimension(); ++j) os << " " << r.matrix(i, j);
    os << "\n";
  }
  for (Vertex v = 0; v < g.index(); ++v) {
    const std::string rep = format_word(r.transversal.reps[v], g.rank());
    os << "coset " << v + 1 << " (H" << (rep.empty() ? "" : "·" + rep) << "): p(z) = " << ratfunc_text(r.genfuncs[v])
       << "\n";
  }
  if (r.oracle) {
    os << "oracle: counts to length " << r.oracle->count_depth << (r.oracle->counts_agree ? " agree" : " DISAGREE");
    if (r.oracle->cycle_period)
      os << ", cycle period " << *r.oracle->cycle_period << (r.oracle->period_agrees ? " agrees" : " DISAGREES");
    os << "\n";
  }
  return os.str();
}

std::string to_text(const AnalysisReport& r) {
  const int n = r.spec.rank;
  std::ostringstream os;
  os << "partition of F_" << n << " with " << r.spec.members.size() << " members: " << verdict_text(r.verdict, n);
  if (!r.witness_certified) os << " (WITNESS NOT CERTIFIED)";
  os << "\n";
  for (std::size_t i = 0; i < r.members.size(); ++i) {
    const MemberData& m = r.members[i];
    const std::string rep = format_word(r.spec.members[i].rep, n);
    os << "  member " << i + 1 << " (H" << (rep.empty() ? "" : "·" + rep) << "): index " << m.index << ", period "
       << m.period << ", p(z) = " << ratfunc_text(m.genfunc) << "\n";
  }
  if (!r.is_partition()) return os.str();
  os << "sum identity: " << (r.sum_identity->holds ? "holds" : "FAILS, residual " + ratfunc_text(r.sum_identity->residual))
     << "\n";
  os << "coefficient identity to k = " << r.series_depth << ": ";
  if (r.coefficient_identity->holds)
    os << "holds\n";
  else
    os << "FAILS at k = " << *r.coefficient_identity->first_failure << "\n";
  findings_text(os, "period repetition", *r.theorem1, true);
  findings_text(os, "index repetition", *r.theorem2, true);
  for (const auto& e : r.residues) {
    os << "residue sum at w^" << e.sum.m << "/" << n << " (w = exp(2 pi i/" << e.sum.h << ")) over "
       << e.sum.attainers.size() << " members: " << cyclo_text(e.sum.value);
    if (e.numeric) {
      char buf[64];
      std::snprintf(buf, sizeof buf, " ~ %.3g%+.3gi", e.numeric->real(), e.numeric->imag());
      os << buf;
    }
    os << "\n";
  }
  for (const auto& c : r.pole_classes) {
    if (c.attainers.size() < 2) continue;
    os << "common poles, roots of " << c.factor.to_string('z') << ": members";
    for (std::size_t a : c.attainers) os << " " << a + 1;
    if (c.assertion_emitted) os << "; equal zero multiplicities predict equal indices: " << (c.indices_equal ? "yes" : "no");
    os << "\n";
  }
  if (r.oracle) {
    os << "oracle: counts to length " << r.oracle->count_depth << (r.oracle->counts_agree ? " agree" : " DISAGREE")
       << ", cycle periods" << (r.oracle->periods_agree ? " agree" : " DISAGREE") << ", words to length "
       << r.oracle->word_length << (r.oracle->words_agree ? " agree" : " DISAGREE") << "\n";
  }
  os << (r.theorems_hold() ? "all checks pass\n" : "CHECK FAILURE\n");
  return os.str();
}

std::string to_text(const ZAnalysisReport& r) {
  std::ostringstream os;
  os << "residue classes:";
  for (const auto& c : r.spec.classes()) os << " " << c.residue << " mod " << c.modulus << ";";
  os << "\n" << to_string(r.verdict.status);
  if (r.verdict.witness) os << ", witness " << *r.verdict.witness;
  os << " (period " << r.verdict.period << ")\n";
  if (r.davenport_rado) {
    os << "largest-modulus and divisibility checks:\n";
    for (const auto& c : r.davenport_rado->clauses) {
      os << "  " << c.clause;
      if (c.subject) os << (subject_is_member(c.clause) ? " class " : " at ") << (subject_is_member(c.clause) ? *c.subject + 1 : *c.subject);
      os << ": " << to_string(c.status) << " (" << c.detail << ")\n";
    }
  }
  os << "lifted to F_1: " << (r.lifted_agrees ? "agrees" : "DISAGREES") << "\n";
  os << (r.holds() ? "all checks pass\n" : "CHECK FAILURE\n");
  return os.str();
}

}  // namespace fgc::io
