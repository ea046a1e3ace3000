#include "hodgedec/mesh_io.hpp"

#include "hodgedec/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace hodgedec {

namespace {

using json = nlohmann::ordered_json;

// throws on non-manifold / non-orientable builds, mirroring the
// load contract; generators go through the same gate
SimplicialComplex finishLoad(SimplicialComplex K) {
  if (!K.isManifold())
    throw NonManifold("mesh is not a manifold (a facet has more than two cofaces)");
  if (!K.isOrientable()) throw NonOrientable("mesh admits no consistent orientation");
  return K;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

SimplicialComplex loadOff(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);

  std::string header;
  in >> header;
  if (header != "OFF") throw ParseError(path + ": missing OFF header");

  long nV = 0, nF = 0, nE = 0;
  if (!(in >> nV >> nF >> nE)) throw ParseError(path + ": malformed counts line");
  if (nV <= 0 || nF <= 0) throw ParseError(path + ": empty mesh");

  std::vector<Vec3> verts(nV);
  for (long i = 0; i < nV; ++i) {
    double x, y, z;
    if (!(in >> x >> y >> z)) throw ParseError(path + ": malformed vertex line");
    verts[i] = Vec3(x, y, z);
  }
  std::vector<std::vector<int>> cells;
  cells.reserve(nF);
  for (long i = 0; i < nF; ++i) {
    int arity;
    if (!(in >> arity)) throw ParseError(path + ": malformed face line");
    if (arity != 3) throw ParseError(path + ": only triangle faces are supported");
    std::vector<int> cell(3);
    if (!(in >> cell[0] >> cell[1] >> cell[2]))
      throw ParseError(path + ": malformed face line");
    cells.push_back(std::move(cell));
  }
  bool planar = true;
  for (const auto& v : verts)
    if (v.z() != 0.0) planar = false;
  return finishLoad(SimplicialComplex::fromCells(2, std::move(verts), cells,
                                                 planar ? 2 : 3));
}

SimplicialComplex loadComplexJson(const std::string& path) {
  json j;
  try {
    j = json::parse(readFile(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (!j.contains("dim") || !j.contains("vertices") || !j.contains("cells"))
    throw ParseError(path + ": complex JSON requires dim, vertices, cells");
  const int dim = j["dim"].get<int>();
  std::vector<Vec3> verts;
  int ambient = 1;
  for (const auto& row : j["vertices"]) {
    if (!row.is_array() || row.empty() || row.size() > 3)
      throw ParseError(path + ": vertex rows must hold 1-3 coordinates");
    ambient = std::max(ambient, static_cast<int>(row.size()));
    Vec3 v = Vec3::Zero();
    for (size_t c = 0; c < row.size(); ++c) v[static_cast<int>(c)] = row[c].get<double>();
    verts.push_back(v);
  }
  std::vector<std::vector<int>> cells;
  for (const auto& row : j["cells"]) cells.push_back(row.get<std::vector<int>>());
  return finishLoad(SimplicialComplex::fromCells(dim, std::move(verts), cells, ambient));
}

SimplicialComplex loadMesh(const std::string& path, MeshFormat format) {
  return format == MeshFormat::Off ? loadOff(path) : loadComplexJson(path);
}

SimplicialComplex loadMesh(const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".off")
    return loadOff(path);
  return loadComplexJson(path);
}

std::string toCanonicalJson(const SimplicialComplex& K) {
  json j;
  j["dim"] = K.dim();
  json verts = json::array();
  for (const auto& v : K.vertices()) {
    json row = json::array();
    for (int c = 0; c < K.ambientDim(); ++c) row.push_back(v[c]);
    verts.push_back(std::move(row));
  }
  j["vertices"] = std::move(verts);
  json cells = json::array();
  for (const auto& cell : K.simplices(K.dim())) cells.push_back(cell);
  j["cells"] = std::move(cells);
  return j.dump();
}

void saveComplexJson(const SimplicialComplex& K, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << toCanonicalJson(K) << "\n";
  if (!out) throw IoError("write failed: " + path);
}

void saveOff(const SimplicialComplex& K, const std::string& path) {
  if (K.dim() != 2) throw BadParams("OFF output requires a dim-2 complex");
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << "OFF\n" << K.vertexCount() << " " << K.count(2) << " " << K.count(1) << "\n";
  out.precision(17);
  for (const auto& v : K.vertices())
    out << v.x() << " " << v.y() << " " << v.z() << "\n";
  for (const auto& t : K.simplices(2))
    out << "3 " << t[0] << " " << t[1] << " " << t[2] << "\n";
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace hodgedec
