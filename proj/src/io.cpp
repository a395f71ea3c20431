#include "hexoct/io.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "hexoct/error.hpp"

namespace hexoct {

namespace fs = std::filesystem;

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, std::string_view content) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  fs::rename(tmp, p);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

SignedPerm perm_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw ParseError(std::string("missing element field '") + key + "'");
  return SignedPerm::parse(j[key].get<std::string>());
}

Json character_json(const CharacterVector& c) { return Json(c.values); }

}  // namespace

Json enumerate_to_json(std::size_t b6_order, std::size_t b6_plus_order, const std::vector<IcosaRep>& reps) {
  Json list = Json::array();
  for (const auto& r : reps) list.push_back({{"g2", r.g2.to_string()}, {"g3", r.g3.to_string()}});
  return {{"format", "hexoct-enumerate-1"},
          {"b6_order", b6_order},
          {"b6_plus_order", b6_plus_order},
          {"a5_subgroup_count", reps.size()},
          {"a5_subgroups", list}};
}

std::vector<IcosaRep> reps_from_json(const Json& j) {
  if (j.value("format", "") != "hexoct-enumerate-1") throw ParseError("not an enumerate artifact");
  std::vector<IcosaRep> reps;
  for (const auto& e : j.at("a5_subgroups")) reps.push_back(make_icosa_rep(perm_field(e, "g2"), perm_field(e, "g3")));
  if (reps.size() != j.at("a5_subgroup_count").get<std::size_t>()) throw ParseError("subgroup count mismatch");
  return reps;
}

Json catalog_to_json(const RepCatalog& cat, const std::string& enumerate_sha256) {
  Json classes = Json::array();
  for (const auto& c : cat.classes)
    classes.push_back({{"type", iso_type_name(c.iso_type)},
                       {"size", c.size},
                       {"g2", c.representative.g2.to_string()},
                       {"g3", c.representative.g3.to_string()},
                       {"character", character_json(c.representative.character)}});
  Json cryst = Json::array();
  for (std::size_t i = 0; i < cat.cryst_reps.size(); ++i) {
    const auto& r = cat.cryst_reps[i];
    cryst.push_back({{"index", i},
                     {"g2", r.g2.to_string()},
                     {"g3", r.g3.to_string()},
                     {"witness", cat.cryst_witness[i].to_string()},
                     {"character", character_json(r.character)},
                     {"determinants", {r.g2.determinant(), r.g3.determinant()}},
                     {"b6plus_class", cat.b6plus_class_id[i]}});
  }
  Json reps = Json::array();
  for (const auto& split : cat.b6plus_split) reps.push_back(cat.cryst_class.find(split.representative).value_or(0));
  return {{"format", "hexoct-catalog-1"},
          {"enumerate_sha256", enumerate_sha256},
          {"a5_subgroup_count", cat.total_a5_subgroups},
          {"classes", classes},
          {"cryst", cryst},
          {"b6plus_sizes", {cat.b6plus_split[0].size(), cat.b6plus_split[1].size()}},
          {"b6plus_representatives", reps}};
}

RepCatalog catalog_from_json(const Json& j, const std::string& enumerate_sha256) {
  if (j.value("format", "") != "hexoct-catalog-1") throw ParseError("not a catalog artifact");
  if (j.at("enumerate_sha256").get<std::string>() != enumerate_sha256)
    throw StaleCache("catalog was built from a different enumeration; rerun 'hexoct classify'");
  RepCatalog cat;
  cat.total_a5_subgroups = j.at("a5_subgroup_count").get<std::size_t>();
  for (const auto& c : j.at("classes")) {
    IcosaRep rep = make_icosa_rep(perm_field(c, "g2"), perm_field(c, "g3"));
    if (iso_type_name(rep.iso_type) != c.at("type").get<std::string>()) throw ParseError("class type mismatch");
    cat.classes.push_back({rep.iso_type, rep, c.at("size").get<std::size_t>()});
  }
  const IcosaRep ihat = build_ihat();
  for (const auto& c : j.at("cryst")) {
    IcosaRep rep = make_icosa_rep(perm_field(c, "g2"), perm_field(c, "g3"));
    const SignedPerm w = perm_field(c, "witness");
    if (conjugate(ihat.g2, w) != rep.g2 || conjugate(ihat.g3, w) != rep.g3)
      throw ParseError("witness does not carry the reference generators onto the stored ones");
    const int id = c.at("b6plus_class").get<int>();
    if (id != 0 && id != 1) throw ParseError("bad B6+ class id");
    cat.cryst_class.members.push_back(rep.group);
    cat.b6plus_split[id].members.push_back(rep.group);
    cat.b6plus_class_id.push_back(id);
    cat.cryst_witness.push_back(w);
    cat.cryst_reps.push_back(std::move(rep));
  }
  if (!std::is_sorted(cat.cryst_class.members.begin(), cat.cryst_class.members.end()))
    throw ParseError("crystallographic members are not in canonical order");
  cat.cryst_class.representative = ihat.group;
  const auto reps = j.at("b6plus_representatives");
  for (int c = 0; c < 2; ++c) cat.b6plus_split[c].representative = cat.cryst_class.members.at(reps.at(c).get<std::size_t>());
  return cat;
}

Json subgroup_class_to_json(const SubgroupClass& cls) {
  auto elems = [](const GroupSet& g) {
    Json a = Json::array();
    for (const auto& x : g) a.push_back(x.to_string());
    return a;
  };
  Json members = Json::array();
  for (const auto& m : cls.members) members.push_back(elems(m));
  return {{"representative", elems(cls.representative)}, {"size", cls.size()}, {"members", members}};
}

ProjectionBundle compute_projection(const IcosaRep& rep) {
  ProjectionBundle b;
  b.p1 = projector(rep, Subspace::Parallel);
  b.p2 = projector(rep, Subspace::Perpendicular);
  b.r = reducing_matrix(rep);
  const QfMat inv = inverse_reducing(b.r);
  b.pi_par = inv.block(0, 0, 3, kDim);
  b.pi_perp = inv.block(3, 0, 3, kDim);
  b.irreps = reduce_rep(rep, b.r);
  b.orbit = icosahedron_orbit(rep, b.r);
  return b;
}

namespace {

Json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw ParseError("expected an integer");
}

}  // namespace

Json qf_to_json(const QfElem& x) {
  return {{"a_num", integer_json(x.rational_part().get_num())},
          {"a_den", integer_json(x.rational_part().get_den())},
          {"b_num", integer_json(x.sqrt5_part().get_num())},
          {"b_den", integer_json(x.sqrt5_part().get_den())}};
}

QfElem qf_from_json(const Json& j) {
  Rational a(integer_from_json(j.at("a_num")), integer_from_json(j.at("a_den")));
  Rational b(integer_from_json(j.at("b_num")), integer_from_json(j.at("b_den")));
  return {a, b};
}

Json qfmat_to_json(const QfMat& m, bool with_float) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(qf_to_json(m(i, k)));
    rows.push_back(row);
  }
  Json out{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
  if (with_float) out["float"] = m.to_double();
  return out;
}

Json projection_to_json(const ProjectionBundle& b, bool with_float) {
  auto mat = [&](const QfMat& m) { return qfmat_to_json(m, with_float); };
  Json out{{"format", "hexoct-projection-1"},
           {"P1", mat(b.p1)},
           {"P2", mat(b.p2)},
           {"R", mat(b.r)},
           {"pi_parallel", mat(b.pi_par)},
           {"pi_perpendicular", mat(b.pi_perp)},
           {"T1", {{"g2", mat(b.irreps.t1[0])}, {"g3", mat(b.irreps.t1[1])}}},
           {"T2", {{"g2", mat(b.irreps.t2[0])}, {"g3", mat(b.irreps.t2[1])}}}};
  if (with_float) out["float_note"] = "float views are rounded to nearest double and are not authoritative";
  return out;
}

std::string orbit_csv(const std::vector<QfMat>& points) {
  std::ostringstream out;
  out << "point,x,y,z\n" << std::setprecision(17);
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << i;
    for (std::size_t k = 0; k < points[i].rows(); ++k) out << ',' << points[i](k, 0).to_double();
    out << '\n';
  }
  return out.str();
}

Json ggraph_to_json(const GGraph& g, const SpectrumReport& s, const std::string& catalog_sha256) {
  Json spec = Json::array();
  for (auto it = s.eigenvalues.rbegin(); it != s.eigenvalues.rend(); ++it) spec.push_back({it->first, it->second});
  Json sizes = Json::array();
  for (const auto& c : s.components) sizes.push_back(c.size());
  return {{"format", "hexoct-ggraph-1"},
          {"subgroup", subgroup_name(g.subgroup)},
          {"subgroup_order", g.subgroup_order},
          {"catalog_sha256", catalog_sha256},
          {"vertices", g.size()},
          {"adjacency", g.adjacency},
          {"spectrum", spec},
          {"degree", s.degree},
          {"regular", s.regular},
          {"components", s.components},
          {"component_sizes", sizes},
          {"triangle_free", s.triangle_free},
          {"bipartite_components", s.bipartite}};
}

std::optional<IntMatrix> cached_adjacency(const Json& j, const std::string& catalog_sha256) {
  if (j.value("format", "") != "hexoct-ggraph-1" || j.value("catalog_sha256", "") != catalog_sha256)
    return std::nullopt;
  return j.at("adjacency").get<IntMatrix>();
}

}  // namespace hexoct
