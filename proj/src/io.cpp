#include "superteich/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace superteich {

using nlohmann::json;

namespace {

void require_version(const json& j) {
  if (!j.contains("version") || j.at("version") != kFileVersion)
    throw ParseError(std::string("file must carry version \"") + kFileVersion + "\"");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

// Terms are [generator, coeff] for a single generator or [[g1,g2,...], coeff]
// in general; generator indices are 1-based as in the g<i> text form.
GrassmannNumber grassmann_from_terms_json(int n, const json& terms) {
  std::vector<GrassmannNumber::Term> out;
  for (const auto& pair : terms) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("Grassmann terms are [generator(s), coefficient] pairs");
    uint64_t mask = 0;
    if (pair.at(0).is_array()) {
      for (const auto& gj : pair.at(0)) {
        int gen = gj.get<int>();
        if (gen < 1 || gen > n) throw std::invalid_argument("generator index out of range");
        uint64_t bit = uint64_t(1) << (gen - 1);
        if (mask & bit) throw std::invalid_argument("repeated generator in one term");
        mask |= bit;
      }
    } else {
      int gen = pair.at(0).get<int>();
      if (gen < 1 || gen > n) throw std::invalid_argument("generator index out of range");
      mask = uint64_t(1) << (gen - 1);
    }
    out.push_back({mask, pair.at(1).get<double>()});
  }
  return GrassmannNumber::from_terms(n, std::move(out));
}

json grassmann_to_terms_json(const GrassmannNumber& x) {
  json terms = json::array();
  for (const auto& [mask, coeff] : x.terms()) {
    if (__builtin_popcountll(mask) == 1) {
      terms.push_back({__builtin_ctzll(mask) + 1, coeff});
    } else {
      json gens = json::array();
      for (int i = 0; i < 64; ++i)
        if (mask & (uint64_t(1) << i)) gens.push_back(i + 1);
      terms.push_back({gens, coeff});
    }
  }
  return terms;
}

}  // namespace

SurfaceData surface_from_json(const json& j) {
  require_version(j);
  int genus = 0, punctures = 0;
  std::vector<Triangle> tris;
  json oj;
  try {
    genus = j.at("genus").get<int>();
    punctures = j.at("punctures").get<int>();
    for (const auto& tj : j.at("triangles")) {
      Triangle t;
      auto e = tj.at("edges");
      auto c = tj.at("corners");
      if (e.size() != 3 || c.size() != 3)
        throw ParseError("triangle needs 3 edges and 3 corners");
      for (int k = 0; k < 3; ++k) {
        t.edges[k] = e.at(k).get<int>();
        t.corners[k] = c.at(k).get<int>();
      }
      tris.push_back(t);
    }
    oj = j.at("orientation");
  } catch (const json::exception& e) {
    throw ParseError(std::string("surface schema: ") + e.what());
  }
  int num_edges = 0;
  for (const auto& t : tris)
    for (int e : t.edges) num_edges = std::max(num_edges, e + 1);
  Triangulation tri(genus, punctures, std::move(tris), num_edges);
  Orientation o(num_edges, 1);
  for (int e = 0; e < num_edges; ++e) {
    std::string key = std::to_string(e);
    if (!oj.contains(key)) throw ParseError("orientation missing edge " + key);
    int v = oj.at(key).get<int>();
    if (v != 1 && v != -1) throw ParseError("orientation values must be +1 or -1");
    o[e] = v;
  }
  return SurfaceData{std::move(tri), std::move(o)};
}

json surface_to_json(const Triangulation& t, const Orientation& o) {
  json j;
  j["version"] = kFileVersion;
  j["genus"] = t.genus();
  j["punctures"] = t.punctures();
  json tris = json::array();
  for (const auto& tr : t.triangles()) {
    json tj;
    tj["edges"] = {tr.edges[0], tr.edges[1], tr.edges[2]};
    tj["corners"] = {tr.corners[0], tr.corners[1], tr.corners[2]};
    tris.push_back(tj);
  }
  j["triangles"] = tris;
  json oj;
  for (int e = 0; e < t.num_edges(); ++e) oj[std::to_string(e)] = o[e];
  j["orientation"] = oj;
  return j;
}

DecoratedCoords coords_from_json(const json& j, const Triangulation& t) {
  require_version(j);
  int n = 0;
  std::vector<GrassmannNumber> lambda(t.num_edges());
  std::vector<GrassmannNumber> mu;
  try {
    n = j.contains("num_generators") ? j.at("num_generators").get<int>() : t.num_triangles();
    const auto& lj = j.at("lambda");
    for (int e = 0; e < t.num_edges(); ++e) {
      std::string key = std::to_string(e);
      if (!lj.contains(key)) throw ParseError("lambda missing edge " + key);
      const auto& v = lj.at(key);
      // Plain positive real, or a term list for even values with a soul part.
      lambda[e] = v.is_number() ? GrassmannNumber::scalar(n, v.get<double>())
                                : grassmann_from_terms_json(n, v);
    }
    mu.assign(t.num_triangles(), GrassmannNumber::zero(n));
    const auto& mj = j.at("mu");
    for (int tr = 0; tr < t.num_triangles(); ++tr) {
      std::string key = std::to_string(tr);
      if (!mj.contains(key)) continue;  // absent triangle means mu = 0
      mu[tr] = grassmann_from_terms_json(n, mj.at(key));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("coordinates schema: ") + e.what());
  }
  DecoratedCoords c = DecoratedCoords::make(n, std::move(lambda), std::move(mu));
  validate_coords(t, c);
  return c;
}

json coords_to_json(const DecoratedCoords& c) {
  json j;
  j["version"] = kFileVersion;
  j["num_generators"] = c.num_generators;
  json lj;
  for (size_t e = 0; e < c.lambda.size(); ++e) {
    if (c.lambda[e].soul().is_zero())
      lj[std::to_string(e)] = c.lambda[e].body();
    else
      lj[std::to_string(e)] = grassmann_to_terms_json(c.lambda[e]);
  }
  j["lambda"] = lj;
  json mj;
  for (size_t t = 0; t < c.mu.size(); ++t)
    mj[std::to_string(t)] = grassmann_to_terms_json(c.mu[t]);
  j["mu"] = mj;
  return j;
}

SurfaceData load_surface(const std::string& path) {
  json j = read_json_file(path);
  if (j.contains("surface")) {
    require_version(j);
    return surface_from_json(j.at("surface"));
  }
  return surface_from_json(j);
}

DecoratedCoords load_coords(const std::string& path, const Triangulation& t) {
  json j = read_json_file(path);
  if (j.contains("coords")) {
    require_version(j);
    return coords_from_json(j.at("coords"), t);
  }
  return coords_from_json(j, t);
}

json monodromy_report_to_json(const MonodromyReport& r) {
  json j;
  j["puncture"] = r.puncture;
  j["n"] = r.n;
  j["aligned_segments"] = r.eps_minus_count;
  j["type"] = to_string(r.type);
  j["star0"] = r.stars.star0.body() > 0 ? 1 : -1;
  j["star1"] = r.stars.star1.str();
  j["star2"] = r.stars.star2.str();
  j["star3"] = r.stars.star3.str();
  j["matrix"] = serialize(r.matrix);
  j["closed_vs_product_residual"] = r.closed_vs_product_residual;
  j["triangular_residual"] = r.triangular_residual;
  j["osp_residual"] = r.osp_residual;
  j["sdet_residual"] = r.sdet_residual;
  j["star2_identity_residual"] = r.star2_identity_residual;
  j["constraint_residual"] = r.constraint_residual.max_abs_coeff();
  return j;
}

json constraint_report_to_json(const ConstraintReport& r) {
  json j;
  j["ok"] = r.ok;
  j["n_ramond"] = r.n_ramond;
  j["n_ns"] = r.n_ns;
  j["rank"] = r.rank;
  j["free_odd_dims"] = r.free_odd_dims;
  j["expected_odd_dims"] = r.expected_odd_dims;
  j["ramond_punctures"] = r.ramond_punctures;
  j["eliminated_triangles"] = r.eliminated_triangles;
  j["notes"] = r.notes;
  return j;
}

std::string constraint_equation_text(const FanData& f) {
  const int n = static_cast<int>(f.chi.size());
  std::ostringstream out;
  for (int k = 0; k < n; ++k) {
    if (k == 0) {
      out << "theta_1";
      continue;
    }
    out << (k % 2 == 1 ? " - " : " + ") << "theta_" << (k + 1) << " * ";
    out << "eps_1..eps_" << k << "/sqrt(chi_1..chi_" << k << ")";
  }
  out << " = 0";
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << contents;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

}  // namespace superteich
