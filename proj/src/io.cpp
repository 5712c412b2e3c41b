#include "hopfcore/io.hpp"

#include "hopfcore/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hopfcore {

namespace {

std::size_t label_index(const std::vector<std::string>& labels, const std::string& l) {
  auto it = std::find(labels.begin(), labels.end(), l);
  if (it == labels.end())
    throw FormatError("unknown basis label '" + l + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

LieAlgebra parse_lie(const json& j) {
  LieAlgebra lie;
  const json& gens = need(j, "generators");
  for (const auto& g : gens)
    lie.generators.push_back(g.get<std::string>());
  const std::size_t n = lie.dim();
  if (n == 0)
    throw FormatError("Lie algebra without generators");
  lie.bracket.assign(n, std::vector<Vector>(n, Vector(n)));
  std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
  if (j.contains("brackets")) {
    for (const auto& b : j.at("brackets")) {
      const json& pair = need(b, "pair");
      if (!pair.is_array() || pair.size() != 2)
        throw FormatError("bracket pair must list two generators");
      const std::size_t a = label_index(lie.generators, pair[0].get<std::string>());
      const std::size_t c = label_index(lie.generators, pair[1].get<std::string>());
      Vector v = json_vector(need(b, "value"), lie.generators);
      if (given[a][c])
        throw FormatError("bracket given twice");
      given[a][c] = true;
      lie.bracket[a][c] = v;
      // The reverse order is filled in unless given; check_lie catches a
      // disagreement between the two.
      if (!given[c][a])
        lie.bracket[c][a] = Rational(-1) * v;
    }
  }
  check_lie(lie);
  return lie;
}

std::vector<std::vector<std::uint32_t>> parse_exponent_list(const DeskAlgebra& A,
                                                            const std::string& text) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' '; }), t.end());
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw FormatError("ideal must be 'zero', 'whole' or a list like (x, y^2)");
  t = t.substr(1, t.size() - 2);
  std::vector<std::vector<std::uint32_t>> out;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto i = std::find(A.labels().begin(), A.labels().end(), item);
    if (i == A.labels().end())
      throw FormatError("'" + item + "' is not a monomial of the algebra");
    out.push_back(A.exponents()[static_cast<std::size_t>(i - A.labels().begin())]);
  }
  if (out.empty())
    throw FormatError("empty monomial list");
  return out;
}

} // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw FormatError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

Rational json_rational(const json& v) {
  if (v.is_string())
    return parse_rational(v.get<std::string>());
  if (v.is_number_integer())
    return Rational(v.get<long>());
  throw FormatError("rational expected as an integer or a \"p/q\" string");
}

Vector json_vector(const json& v, const std::vector<std::string>& labels) {
  if (!v.is_object())
    throw FormatError("vector expected as {\"label\": coefficient}");
  Vector out(labels.size());
  for (const auto& [k, c] : v.items())
    out[label_index(labels, k)] += json_rational(c);
  return out;
}

Instance load_instance(const json& j, const std::string& name, std::optional<unsigned> degree) {
  try {
    Instance inst;
    inst.name = name;
    inst.kind = need(j, "kind").get<std::string>();
    if (j.contains("generator_order"))
      inst.generator_order = j.at("generator_order").get<std::vector<std::string>>();
    unsigned D = j.contains("degree_bound") ? j.at("degree_bound").get<unsigned>() : 0;
    if (inst.kind == "ueg") {
      if (degree)
        D = *degree;
      inst.h = std::make_shared<const FilteredBialgebra>(build_ueg(parse_lie(need(j, "lie")), D));
    } else if (inst.kind == "xyw") {
      if (degree)
        D = *degree;
      inst.h = std::make_shared<const FilteredBialgebra>(build_xyw(D));
    } else if (inst.kind == "raw") {
      const json& t = need(j, "tables");
      BialgebraTables tb;
      tb.labels = need(t, "labels").get<std::vector<std::string>>();
      tb.degree_bound = D;
      if (degree && *degree != D)
        throw FormatError("raw tables are fixed at degree " + std::to_string(D));
      const std::size_t n = tb.labels.size();
      if (t.contains("degrees"))
        tb.degrees = t.at("degrees").get<std::vector<unsigned>>();
      tb.mult.assign(n * n, std::nullopt);
      for (const auto& e : need(t, "mult")) {
        const std::size_t a = label_index(tb.labels, need(e, "left").get<std::string>());
        const std::size_t b = label_index(tb.labels, need(e, "right").get<std::string>());
        tb.mult[a * n + b] = json_vector(need(e, "value"), tb.labels);
      }
      tb.comult.assign(n, {});
      for (const auto& [k, terms] : need(t, "comult").items()) {
        const std::size_t i = label_index(tb.labels, k);
        for (const auto& term : terms) {
          if (!term.is_array() || term.size() != 3)
            throw FormatError("comult term must be [left, right, coeff]");
          tb.comult[i].push_back({label_index(tb.labels, term[0].get<std::string>()),
                                  label_index(tb.labels, term[1].get<std::string>()),
                                  json_rational(term[2])});
        }
      }
      tb.counit = json_vector(need(t, "counit"), tb.labels);
      tb.unit_index = label_index(tb.labels, need(t, "unit").get<std::string>());
      if (t.contains("antipode")) {
        std::vector<Vector> s(n, Vector(n));
        for (const auto& [k, v] : t.at("antipode").items())
          s[label_index(tb.labels, k)] = json_vector(v, tb.labels);
        tb.antipode = std::move(s);
      }
      inst.h = std::make_shared<const FilteredBialgebra>(std::move(tb));
    } else {
      throw FormatError("unknown instance kind '" + inst.kind + "'");
    }
    return inst;
  } catch (const json::exception& e) {
    throw FormatError(name + ": " + e.what());
  }
}

Instance load_instance(const std::string& path_or_name, std::optional<unsigned> degree) {
  json j;
  if (path_or_name == "heis") {
    j = {{"kind", "ueg"},
         {"degree_bound", 4},
         {"lie",
          {{"generators", {"x", "y", "z"}},
           {"brackets", {{{"pair", {"x", "y"}}, {"value", {{"z", 1}}}}}}}}};
  } else if (path_or_name == "sl2") {
    j = {{"kind", "ueg"},
         {"degree_bound", 4},
         {"lie",
          {{"generators", {"e", "f", "h"}},
           {"brackets",
            {{{"pair", {"e", "f"}}, {"value", {{"h", 1}}}},
             {{"pair", {"h", "e"}}, {"value", {{"e", 2}}}},
             {{"pair", {"h", "f"}}, {"value", {{"f", -2}}}}}}}}};
  } else if (path_or_name == "xyw") {
    j = {{"kind", "xyw"}, {"degree_bound", 4}};
  } else if (path_or_name == "abelian") {
    j = {{"kind", "ueg"}, {"degree_bound", 3}, {"lie", {{"generators", {"x"}}}}};
  } else {
    j = read_json_file(path_or_name);
  }
  return load_instance(j, path_or_name, degree);
}

CoefficientRing parse_ring(const json& j) {
  try {
    const auto labels = need(j, "labels").get<std::vector<std::string>>();
    const std::size_t n = labels.size();
    std::vector<std::optional<Vector>> table(n * n);
    for (const auto& e : need(j, "mult")) {
      const std::size_t a = label_index(labels, need(e, "left").get<std::string>());
      const std::size_t b = label_index(labels, need(e, "right").get<std::string>());
      table[a * n + b] = json_vector(need(e, "value"), labels);
    }
    for (std::size_t i = 0; i < n * n; ++i)
      if (!table[i])
        table[i] = Vector(n);
    std::optional<RingFlags> flags;
    if (j.contains("flags")) {
      const json& f = j.at("flags");
      flags = RingFlags{f.value("prime", false), f.value("semiprime", false),
                        f.value("domain", false)};
    }
    const std::string name = j.value("name", std::string("ring"));
    return CoefficientRing(
        TableAlgebra(name, labels, std::move(table), json_vector(need(j, "one"), labels)), flags);
  } catch (const json::exception& e) {
    throw FormatError(std::string("ring file: ") + e.what());
  }
}

CoefficientRing load_ring(const std::string& name_or_path) {
  for (const char* b : {"q", "m2q", "qxq", "qx2"})
    if (name_or_path == b)
      return builtin_ring(name_or_path);
  return parse_ring(read_json_file(name_or_path));
}

ActionSpec parse_action(const json& j) {
  try {
    ActionSpec spec;
    const json& a = need(j, "algebra");
    const std::string kind = need(a, "kind").get<std::string>();
    if (kind == "polynomial") {
      spec.algebra = std::make_shared<const DeskAlgebra>(DeskAlgebra::polynomial(
          need(a, "variables").get<std::vector<std::string>>(),
          need(a, "degree_bound").get<unsigned>()));
    } else if (kind == "finite") {
      CoefficientRing r = parse_ring(a);
      spec.algebra = std::make_shared<const DeskAlgebra>(TableAlgebra(r));
    } else {
      throw FormatError("unknown algebra kind '" + kind + "'");
    }
    const DeskAlgebra& A = *spec.algebra;
    for (const auto& [id, g] : need(j, "generators").items()) {
      if (g.contains("terms")) {
        std::vector<DiffTerm> terms;
        for (const auto& t : g.at("terms"))
          terms.push_back({json_rational(need(t, "coeff")),
                           need(t, "mul").get<std::vector<std::uint32_t>>(),
                           need(t, "diff").get<std::vector<std::uint32_t>>()});
        spec.gen_ops.emplace(id, A.differential_operator(terms));
      } else if (g.contains("matrix")) {
        const json& rows = g.at("matrix");
        if (rows.size() != A.dim())
          throw FormatError("operator '" + id + "' has wrong row count");
        QMatrix m(A.dim(), A.dim());
        for (std::size_t r = 0; r < A.dim(); ++r) {
          if (rows[r].size() != A.dim())
            throw FormatError("operator '" + id + "' has wrong column count");
          for (std::size_t c = 0; c < A.dim(); ++c)
            m(r, c) = json_rational(rows[r][c]);
        }
        spec.gen_ops.emplace(id, std::move(m));
      } else {
        throw FormatError("operator '" + id + "' needs \"terms\" or \"matrix\"");
      }
    }
    spec.ideal = j.contains("ideal") ? j.at("ideal") : json{{"kind", "zero"}};
    return spec;
  } catch (const json::exception& e) {
    throw FormatError(std::string("action file: ") + e.what());
  }
}

ActionSpec load_action(const std::string& path) { return parse_action(read_json_file(path)); }

IdealOracle make_ideal(std::shared_ptr<const DeskAlgebra> A, const json& spec) {
  try {
    const std::string kind = need(spec, "kind").get<std::string>();
    if (kind == "zero")
      return IdealOracle::zero(std::move(A));
    if (kind == "whole")
      return IdealOracle::whole(std::move(A));
    if (kind == "monomial") {
      std::vector<std::vector<std::uint32_t>> gens;
      for (const auto& g : need(spec, "generators")) {
        if (g.is_string())
          gens.push_back(parse_exponent_list(*A, "(" + g.get<std::string>() + ")").front());
        else
          gens.push_back(g.get<std::vector<std::uint32_t>>());
      }
      return IdealOracle::monomial(std::move(A), gens);
    }
    if (kind == "principal") {
      Vector g = json_vector(need(spec, "generator"), A->labels());
      return IdealOracle::principal(std::move(A), g);
    }
    if (kind == "subspace") {
      std::vector<Vector> span;
      for (const auto& v : need(spec, "span"))
        span.push_back(json_vector(v, A->labels()));
      return IdealOracle::subspace(std::move(A), std::move(span));
    }
    throw FormatError("unknown ideal kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw FormatError(std::string("ideal: ") + e.what());
  }
}

IdealOracle make_ideal(std::shared_ptr<const DeskAlgebra> A, const std::string& text) {
  if (text == "zero")
    return IdealOracle::zero(std::move(A));
  if (text == "whole")
    return IdealOracle::whole(std::move(A));
  if (!A->is_polynomial())
    throw FormatError("monomial ideals need a polynomial algebra");
  auto gens = parse_exponent_list(*A, text);
  return IdealOracle::monomial(std::move(A), gens);
}

json report_json(const Report& r) {
  json lines = json::array();
  for (const auto& l : r.lines()) {
    json o = {{"check", l.check}, {"subject", l.subject}, {"status", status_name(l.status)}};
    if (!l.detail.empty())
      o["detail"] = l.detail;
    lines.push_back(std::move(o));
  }
  return lines;
}

} // namespace hopfcore
