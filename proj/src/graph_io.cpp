#include "horolab/graph_io.hpp"

#include <istream>
#include <ostream>
#include <set>

#include "horolab/errors.hpp"

namespace horolab {

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

void write_dot(const BallGraph& g, std::ostream& out, const std::string& graph_name) {
  out << "graph " << graph_name << " {\n";
  for (int v = 0; v < g.size(); ++v) {
    std::string label = g.name(v).empty() ? "e" : g.name(v);
    out << "  " << dot_quote(g.name(v).empty() ? "<e>" : g.name(v)) << " [label=" << dot_quote(label);
    if (v == g.basepoint()) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (int v = 0; v < g.size(); ++v) {
    for (int w : g.neighbors(v)) {
      if (v < w)
        out << "  " << dot_quote(g.name(v).empty() ? "<e>" : g.name(v)) << " -- "
            << dot_quote(g.name(w).empty() ? "<e>" : g.name(w)) << ";\n";
    }
  }
  out << "}\n";
}

void write_graphml(const BallGraph& g, std::ostream& out) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"norm\" for=\"node\" attr.name=\"base_norm\" attr.type=\"int\"/>\n"
      << "  <graph id=\"ball\" edgedefault=\"undirected\">\n";
  for (int v = 0; v < g.size(); ++v) {
    out << "    <node id=\"" << xml_escape(g.name(v).empty() ? "<e>" : g.name(v)) << "\">"
        << "<data key=\"norm\">" << g.base_norm(v) << "</data></node>\n";
  }
  int eid = 0;
  for (int v = 0; v < g.size(); ++v) {
    for (int w : g.neighbors(v)) {
      if (v < w)
        out << "    <edge id=\"e" << eid++ << "\" source=\""
            << xml_escape(g.name(v).empty() ? "<e>" : g.name(v)) << "\" target=\""
            << xml_escape(g.name(w).empty() ? "<e>" : g.name(w)) << "\"/>\n";
    }
  }
  out << "  </graph>\n</graphml>\n";
}

BallGraph read_adjacency_csv(std::istream& in, const std::string& basepoint) {
  std::string line;
  if (!std::getline(in, line)) fail(errc::io_failure, "empty adjacency CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "u,v") fail(errc::io_failure, "adjacency CSV must start with header \"u,v\"");
  std::vector<std::pair<std::string, std::string>> edges;
  std::set<std::string> names;
  names.insert(basepoint);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos)
      fail(errc::io_failure, "line " + std::to_string(lineno) + ": expected \"u,v\"");
    std::string u = line.substr(0, comma);
    std::string v = line.substr(comma + 1);
    if (u.empty() || v.empty())
      fail(errc::io_failure, "line " + std::to_string(lineno) + ": empty vertex id");
    names.insert(u);
    names.insert(v);
    edges.emplace_back(std::move(u), std::move(v));
  }
  return BallGraph::from_parts(std::vector<std::string>(names.begin(), names.end()),
                               std::move(edges), basepoint);
}

void write_adjacency_csv(const BallGraph& g, std::ostream& out) {
  // the identity vertex of a word space has the empty name; exported ids
  // must be nonempty
  auto id = [&](int v) { return g.name(v).empty() ? std::string("<e>") : g.name(v); };
  out << "u,v\n";
  for (int v = 0; v < g.size(); ++v) {
    for (int w : g.neighbors(v)) {
      if (v < w) out << id(v) << "," << id(w) << "\n";
    }
  }
}

}  // namespace horolab
