#include "gmsh.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"

namespace swe {

namespace {

struct LineReader {
  std::istream& in;
  std::string name;
  int line_no = 0;

  // Next non-empty line, stripped of trailing carriage returns.
  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++line_no;
      while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
        line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void error(const std::string& what) const {
    std::ostringstream os;
    os << name << ":" << line_no << ": " << what;
    fail(ErrorCode::parse, os.str());
  }
};

long parse_count(LineReader& reader) {
  std::string line;
  if (!reader.next(line)) reader.error("unexpected end of file, expected count");
  std::istringstream is(line);
  long count = -1;
  if (!(is >> count) || count < 0) reader.error("invalid count '" + line + "'");
  return count;
}

}  // namespace

Mesh parse_gmsh(std::istream& in, const std::string& name) {
  LineReader reader{in, name};
  std::string line;

  struct RawNode {
    Vec2 pos;
  };
  std::unordered_map<long, RawNode> nodes;
  struct RawTriangle {
    std::array<long, 3> node;
  };
  struct RawSegment {
    std::array<long, 2> node;
    int tag;
  };
  std::vector<RawTriangle> triangles;
  std::vector<RawSegment> segments;
  bool saw_format = false;

  while (reader.next(line)) {
    if (line[0] != '$') reader.error("expected section marker, got '" + line + "'");
    const std::string section = line.substr(1);

    if (section == "MeshFormat") {
      if (!reader.next(line)) reader.error("truncated $MeshFormat section");
      std::istringstream is(line);
      std::string version;
      int file_type = -1, data_size = 0;
      if (!(is >> version >> file_type >> data_size))
        reader.error("malformed mesh format line '" + line + "'");
      if (version.rfind("2.2", 0) != 0)
        reader.error("unsupported MSH version " + version +
                     " (only 2.2 is handled)");
      if (file_type != 0) reader.error("binary MSH files are not handled");
      if (!reader.next(line) || line != "$EndMeshFormat")
        reader.error("missing $EndMeshFormat");
      saw_format = true;
    } else if (section == "Nodes") {
      const long count = parse_count(reader);
      for (long k = 0; k < count; ++k) {
        if (!reader.next(line)) reader.error("truncated $Nodes section");
        std::istringstream is(line);
        long id = 0;
        double x = 0, y = 0, z = 0;
        if (!(is >> id >> x >> y >> z))
          reader.error("malformed node line '" + line + "'");
        if (!nodes.emplace(id, RawNode{{x, y}}).second) {
          std::ostringstream os;
          os << "duplicate node id " << id;
          reader.error(os.str());
        }
      }
      if (!reader.next(line) || line != "$EndNodes")
        reader.error("missing $EndNodes");
    } else if (section == "Elements") {
      const long count = parse_count(reader);
      for (long k = 0; k < count; ++k) {
        if (!reader.next(line)) reader.error("truncated $Elements section");
        std::istringstream is(line);
        long id = 0;
        int type = 0, ntags = 0;
        if (!(is >> id >> type >> ntags))
          reader.error("malformed element line '" + line + "'");
        std::vector<long> tags(ntags);
        for (int i = 0; i < ntags; ++i)
          if (!(is >> tags[i])) reader.error("malformed element tags");
        if (type == 2) {  // 3-node triangle
          RawTriangle tri{};
          if (!(is >> tri.node[0] >> tri.node[1] >> tri.node[2]))
            reader.error("triangle element with fewer than 3 nodes");
          triangles.push_back(tri);
        } else if (type == 1) {  // 2-node line, carries a boundary tag
          RawSegment seg{};
          seg.tag = ntags > 0 ? static_cast<int>(tags[0]) : 0;
          if (!(is >> seg.node[0] >> seg.node[1]))
            reader.error("line element with fewer than 2 nodes");
          segments.push_back(seg);
        }
        // all other element types (points, quads, ...) are ignored
      }
      if (!reader.next(line) || line != "$EndElements")
        reader.error("missing $EndElements");
    } else {
      // Skip unknown sections wholesale.
      const std::string terminator = "$End" + section;
      bool closed = false;
      while (reader.next(line)) {
        if (line == terminator) {
          closed = true;
          break;
        }
      }
      if (!closed) reader.error("missing " + terminator);
    }
  }

  if (!saw_format) {
    reader.error("missing $MeshFormat section");
  }
  if (triangles.empty())
    fail(ErrorCode::mesh, name + ": mesh contains no triangles");

  // Densely renumber the nodes actually used by triangles.
  std::unordered_map<long, int> dense;
  dense.reserve(nodes.size());
  TriangleSoup soup;
  auto map_node = [&](long id) {
    auto it = dense.find(id);
    if (it != dense.end()) return it->second;
    auto node = nodes.find(id);
    if (node == nodes.end()) {
      std::ostringstream os;
      os << name << ": element references unknown node id " << id;
      fail(ErrorCode::parse, os.str());
    }
    const int idx = static_cast<int>(soup.points.size());
    soup.points.push_back(node->second.pos);
    dense.emplace(id, idx);
    return idx;
  };

  soup.triangles.reserve(triangles.size());
  for (const RawTriangle& tri : triangles)
    soup.triangles.push_back(
        {map_node(tri.node[0]), map_node(tri.node[1]), map_node(tri.node[2])});

  for (const RawSegment& seg : segments) {
    auto a = dense.find(seg.node[0]);
    auto b = dense.find(seg.node[1]);
    // Segments on nodes no triangle uses belong to other geometry; skip.
    if (a == dense.end() || b == dense.end()) continue;
    soup.tagged_segments.push_back({a->second, b->second, seg.tag});
  }

  return build_connectivity(soup);
}

Mesh load_gmsh(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io, "cannot open mesh file '" + path + "'");
  return parse_gmsh(in, path);
}

}  // namespace swe
