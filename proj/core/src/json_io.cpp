#include "hstrata/json_io.hpp"

namespace hstrata {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(Error::Code::InvalidInput, "bad input: " + what);
}

const Json& expect(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

int expect_int(const Json& j, const char* key, int min_value) {
  const Json& v = expect(j, key);
  if (!v.is_number_integer()) bad(std::string("key \"") + key + "\" must be an integer");
  const int out = v.get<int>();
  if (out < min_value) bad(std::string("key \"") + key + "\" below " + std::to_string(min_value));
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("malformed JSON");
  return j;
}

Json field_to_json(const FieldSpec& field) {
  Json j;
  if (field.is_prime_field()) {
    j["field"] = "Fp";
    j["p"] = field.characteristic();
  } else {
    j["field"] = "Q";
  }
  return j;
}

FieldSpec field_from_json(const Json& j) {
  const Json& f = expect(j, "field");
  if (!f.is_string()) bad("field must be a string");
  if (f == "Q") return FieldSpec::rationals();
  if (f == "Fp") {
    const Json& p = expect(j, "p");
    if (!p.is_number_unsigned() && !p.is_number_integer()) bad("p must be an integer");
    return FieldSpec::prime_field(p.get<unsigned long>());
  }
  bad("unknown field kind");
}

Json poly_to_json(const GradedPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json term;
    term["c"] = c.str();
    term["e"] = e;
    terms.push_back(std::move(term));
  }
  Json j;
  j["vars"] = p.nvars();
  j["terms"] = std::move(terms);
  return j;
}

GradedPoly poly_from_json(const Json& j, const FieldSpec& field) {
  const int vars = expect_int(j, "vars", 1);
  const Json& terms = expect(j, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  GradedPoly p(field, vars);
  for (const auto& term : terms) {
    const Json& c = expect(term, "c");
    const Json& e = expect(term, "e");
    if (!c.is_string()) bad("coefficient must be a scalar string");
    if (!e.is_array() || static_cast<int>(e.size()) != vars) bad("exponent vector length");
    Exponents exps;
    for (const auto& v : e) {
      if (!v.is_number_integer() || v.get<long>() < 0) bad("exponents must be >= 0");
      exps.push_back(v.get<uint32_t>());
    }
    p.add_term(exps, Scalar::parse(field, c.get<std::string>()));
  }
  return p;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, const FieldSpec& field) {
  if (!j.is_array() || j.empty()) bad("matrix must be a non-empty array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) bad("matrix row must be an array");
    std::vector<Scalar> out;
    for (const auto& v : row) {
      if (!v.is_string()) bad("matrix entries must be scalar strings");
      out.push_back(Scalar::parse(field, v.get<std::string>()));
    }
    rows.push_back(std::move(out));
  }
  for (const auto& row : rows)
    if (row.size() != rows[0].size()) bad("ragged matrix");
  return Matrix::from_rows(field, rows);
}

Json higgs_to_json(const HiggsField& theta) {
  Json comps = Json::array();
  for (const auto& a : theta.components()) comps.push_back(matrix_to_json(a));
  Json j;
  j["r"] = theta.rank();
  j["d"] = theta.dim();
  j["components"] = std::move(comps);
  return j;
}

HiggsField higgs_from_json(const Json& j, const FieldSpec& field) {
  const int r = expect_int(j, "r", 0);
  const int d = expect_int(j, "d", 1);
  const Json& comps = expect(j, "components");
  if (!comps.is_array() || static_cast<int>(comps.size()) != d)
    bad("components must be an array of d matrices");
  if (r == 0) return HiggsField::empty(field, d);
  std::vector<Matrix> matrices;
  for (const auto& c : comps) {
    Matrix m = matrix_from_json(c, field);
    if (m.rows() != r || m.cols() != r) bad("component size differs from r");
    matrices.push_back(std::move(m));
  }
  return HiggsField::validated(field, std::move(matrices));
}

Json hitchin_to_json(const HitchinPoint& s) {
  Json coeffs = Json::array();
  for (int i = 1; i <= s.r(); ++i) coeffs.push_back(poly_to_json(s.coeff(i)));
  Json j;
  j["r"] = s.r();
  j["coeffs"] = std::move(coeffs);
  return j;
}

HitchinPoint hitchin_from_json(const Json& j, const FieldSpec& field) {
  const int r = expect_int(j, "r", 1);
  const Json& coeffs = expect(j, "coeffs");
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != r)
    bad("coeffs must be an array of r polynomials");
  std::vector<GradedPoly> polys;
  for (const auto& c : coeffs) polys.push_back(poly_from_json(c, field));
  const int nvars = polys[0].nvars();
  for (const auto& p : polys)
    if (p.nvars() != nvars) bad("coefficient variable counts differ");
  return HitchinPoint(field, nvars, std::move(polys));
}

Json proj_to_json(const ProjHitchinPoint& s) {
  Json coeffs = Json::array();
  for (int i = 1; i <= s.r(); ++i) coeffs.push_back(poly_to_json(s.coeff(i)));
  Json j;
  j["r"] = s.r();
  j["s0"] = s.s0().str();
  j["coeffs"] = std::move(coeffs);
  return j;
}

ProjHitchinPoint proj_from_json(const Json& j, const FieldSpec& field) {
  const int r = expect_int(j, "r", 1);
  const Json& s0 = expect(j, "s0");
  if (!s0.is_string()) bad("s0 must be a scalar string");
  const Json& coeffs = expect(j, "coeffs");
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != r)
    bad("coeffs must be an array of r polynomials");
  std::vector<GradedPoly> polys;
  for (const auto& c : coeffs) polys.push_back(poly_from_json(c, field));
  const int nvars = polys[0].nvars();
  for (const auto& p : polys)
    if (p.nvars() != nvars) bad("coefficient variable counts differ");
  return ProjHitchinPoint(field, nvars, Scalar::parse(field, s0.get<std::string>()),
                          std::move(polys));
}

Json roots_to_json(const RootMultiset& roots) {
  Json out = Json::array();
  for (const auto& [t, m] : roots.entries()) {
    Json entry;
    Json coeffs = Json::array();
    for (const auto& c : t.coeffs()) coeffs.push_back(c.str());
    entry["coeffs"] = std::move(coeffs);
    entry["mult"] = m;
    out.push_back(std::move(entry));
  }
  return out;
}

Json group_to_json(const GroupRep& g) {
  Json gens = Json::array();
  for (const auto& m : g.generators()) gens.push_back(matrix_to_json(m));
  Json j;
  j["generators"] = std::move(gens);
  return j;
}

GroupRep group_from_json(const Json& j, const FieldSpec& field) {
  const Json& gens = expect(j, "generators");
  if (!gens.is_array()) bad("generators must be an array");
  if (gens.empty()) bad("generators array is empty; need at least the dimension via one matrix");
  std::vector<Matrix> matrices;
  for (const auto& g : gens) {
    Matrix m = matrix_from_json(g, field);
    if (!m.is_square()) bad("generators must be square");
    matrices.push_back(std::move(m));
  }
  const int dim = matrices[0].rows();
  return GroupRep::close(field, dim, std::move(matrices));
}

Json orbits_to_json(const OrbitDecomposition& dec) {
  Json orbits = Json::array();
  for (const auto& orbit : dec.orbits) {
    Json o;
    Json roots = Json::array();
    for (const auto& t : orbit.roots) {
      Json coeffs = Json::array();
      for (const auto& c : t.coeffs()) coeffs.push_back(c.str());
      roots.push_back(std::move(coeffs));
    }
    o["roots"] = std::move(roots);
    o["mult"] = orbit.multiplicity;
    o["stabilizer"] = orbit.stabilizer;
    o["factor"] = hitchin_to_json(orbit.factor);
    orbits.push_back(std::move(o));
  }
  Json j;
  j["orbits"] = std::move(orbits);
  return j;
}

Json spectral_datum_to_json(const SpectralDatum& datum) {
  Json j;
  j["stabilizer"] = datum.stabilizer;
  j["cosets"] = datum.cosets;
  Json root = Json::array();
  for (const auto& c : datum.root.coeffs()) root.push_back(c.str());
  j["root"] = std::move(root);
  Json orbit = Json::array();
  for (const auto& t : datum.orbit_roots) {
    Json coeffs = Json::array();
    for (const auto& c : t.coeffs()) coeffs.push_back(c.str());
    orbit.push_back(std::move(coeffs));
  }
  j["orbit"] = std::move(orbit);
  j["perm_action"] = datum.perm_action;
  j["decomposition_type"] = datum.decomposition_type;
  return j;
}

Json split_result_to_json(const SplitResult& result) {
  Json j;
  switch (result.verdict) {
    case SplitVerdict::Split:
      j["result"] = "split";
      j["roots"] = roots_to_json(*result.roots);
      break;
    case SplitVerdict::NotSplit:
      j["result"] = "not_split";
      break;
    case SplitVerdict::Inconclusive:
      j["result"] = "inconclusive";
      break;
  }
  return j;
}

Json split_profile_to_json(const SplitProfile& profile) {
  Json j;
  j["linear_part"] = roots_to_json(profile.linear_part);
  j["residual_degree"] = profile.residual_degree;
  j["residual_certified"] = profile.residual_certified;
  return j;
}

Json h_split_to_json(const std::vector<HSplitEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) {
    Json j;
    j["orbit_size"] = e.orbit_size;
    j["stabilizer_order"] = e.stabilizer_order;
    out.push_back(std::move(j));
  }
  Json j;
  j["orbits"] = std::move(out);
  return j;
}

Json torus_map_to_json(const AffineTorusMap& m) {
  Json a = Json::array();
  for (const auto& row : m.linear()) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v.get_si());
    a.push_back(std::move(r));
  }
  Json b = Json::array();
  for (const auto& v : m.translation()) b.push_back(v.get_str());
  Json j;
  j["A"] = std::move(a);
  j["b"] = std::move(b);
  return j;
}

AffineTorusMap torus_map_from_json(const Json& j) {
  const Json& a = expect(j, "A");
  const Json& b = expect(j, "b");
  if (!a.is_array() || a.empty()) bad("A must be a non-empty array of rows");
  IntMat linear;
  for (const auto& row : a) {
    if (!row.is_array()) bad("A rows must be arrays");
    std::vector<mpz_class> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) bad("A entries must be integers");
      r.emplace_back(v.get<long>());
    }
    linear.push_back(std::move(r));
  }
  if (!b.is_array() || b.size() != linear.size()) bad("b length differs from n");
  RatVec trans;
  for (const auto& v : b) {
    if (!v.is_string()) bad("b entries must be rational strings");
    mpq_class q;
    if (q.set_str(v.get<std::string>(), 10) != 0) bad("bad rational: " + v.get<std::string>());
    q.canonicalize();
    trans.push_back(q);
  }
  return AffineTorusMap(std::move(linear), std::move(trans));
}

Json torus_action_to_json(const TorusGroupAction& action) {
  Json maps = Json::array();
  for (int i = 0; i < action.size(); ++i) maps.push_back(torus_map_to_json(action.element(i)));
  Json j;
  j["n"] = action.n();
  j["maps"] = std::move(maps);
  j["codim"] = action.convention() == CodimConvention::Complex ? "complex" : "real";
  if (action.complex_structure()) {
    Json rows = Json::array();
    for (const auto& row : *action.complex_structure()) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(v.get_str());
      rows.push_back(std::move(r));
    }
    j["J"] = std::move(rows);
  }
  return j;
}

TorusGroupAction torus_action_from_json(const Json& j) {
  const int n = expect_int(j, "n", 1);
  const Json& maps = expect(j, "maps");
  if (!maps.is_array() || maps.empty()) bad("maps must be a non-empty array");
  std::vector<AffineTorusMap> out;
  for (const auto& m : maps) {
    AffineTorusMap map = torus_map_from_json(m);
    if (map.n() != n) bad("map dimension differs from n");
    out.push_back(std::move(map));
  }
  CodimConvention conv = CodimConvention::Real;
  if (j.contains("codim")) {
    const Json& c = j.at("codim");
    if (c == "complex")
      conv = CodimConvention::Complex;
    else if (c != "real")
      bad("codim must be \"real\" or \"complex\"");
  }
  std::optional<RatMat> J;
  if (j.contains("J")) {
    const Json& rows = j.at("J");
    if (!rows.is_array()) bad("J must be a matrix");
    RatMat jm;
    for (const auto& row : rows) {
      if (!row.is_array()) bad("J rows must be arrays");
      RatVec r;
      for (const auto& v : row) {
        if (!v.is_string()) bad("J entries must be rational strings");
        mpq_class q;
        if (q.set_str(v.get<std::string>(), 10) != 0) bad("bad rational in J");
        q.canonicalize();
        r.push_back(q);
      }
      jm.push_back(std::move(r));
    }
    J = std::move(jm);
  }
  return TorusGroupAction::close(std::move(out), std::move(J), conv);
}

Json fixed_locus_to_json(const FixedLocusReport& rep) {
  Json j;
  j["nonempty"] = rep.nonempty;
  if (rep.codim)
    j["codim"] = *rep.codim;
  else
    j["codim"] = nullptr;
  return j;
}

Json connecting_series_to_json(const ConnectingSeries& series) {
  Json j;
  j["series"] = series.series;
  return j;
}

Json classification_to_json(const CoverClassification& c) {
  Json j;
  j["etale"] = c.etale;
  j["quasi_etale"] = c.quasi_etale;
  if (c.genuinely_ramified_in_codim)
    j["genuinely_ramified_in_codim"] = *c.genuinely_ramified_in_codim;
  else
    j["genuinely_ramified_in_codim"] = nullptr;
  j["prime_to_p"] = c.prime_to_p;
  return j;
}

}  // namespace hstrata
