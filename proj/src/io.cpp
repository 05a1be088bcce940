#include "hitsets/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hitsets {

namespace {

using nlohmann::json;

json parse_doc(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError(what + ": malformed JSON");
  return j;
}

const json& field(const json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(what + ": missing field \"" + key + "\"");
  return j.at(key);
}

int int_field(const json& j, const char* key, const std::string& what) {
  const json& v = field(j, key, what);
  if (!v.is_number_integer()) throw InputError(what + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_array(const json& v, const std::string& what) {
  if (!v.is_array()) throw InputError(what + ": expected an array of integers");
  std::vector<int> out;
  out.reserve(v.size());
  for (const json& e : v) {
    if (!e.is_number_integer()) throw InputError(what + ": expected an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

Rational rational_field(const json& j, const char* key, const std::string& what) {
  const json& v = field(j, key, what);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number())
    throw InputError(what + ": \"" + key +
                     "\" is a non-integer number; quote exact rationals like \"3/4\"");
  throw InputError(what + ": \"" + key + "\" must be an integer or a rational string");
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  return lines;
}

json side_tag(Side s) { return to_string(s); }

Side parse_side(const json& j, const std::string& what) {
  const json& v = field(j, "side", what);
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s == "below") return Side::below;
    if (s == "above") return Side::above;
  }
  throw InputError(what + ": \"side\" must be \"below\" or \"above\"");
}

}  // namespace

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write file: " + tmp);
    out << content;
    if (!out) throw InputError("write failed: " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw InputError("cannot move " + tmp + " to " + path + ": " + ec.message());
}

// ---------------------------------------------------------------------------
// JSON documents
// ---------------------------------------------------------------------------

Hypergraph parse_hypergraph_json(const std::string& text) {
  const std::string what = "hypergraph document";
  json j = parse_doc(text, what);
  int n = int_field(j, "n", what);
  const json& rs = field(j, "ranges", what);
  if (!rs.is_array()) throw InputError(what + ": \"ranges\" must be an array");
  std::vector<Range> ranges;
  ranges.reserve(rs.size());
  for (const json& r : rs) ranges.push_back(int_array(r, what + " range"));
  return Hypergraph::make(n, std::move(ranges));
}

std::string hypergraph_to_json(const Hypergraph& h) {
  json j;
  j["n"] = h.n;
  j["ranges"] = h.ranges;
  return j.dump(2) + "\n";
}

Coloring parse_coloring_json(const std::string& text) {
  const std::string what = "coloring document";
  json j = parse_doc(text, what);
  return Coloring{int_array(field(j, "colors", what), what)};
}

std::string coloring_to_json(const Coloring& c, const std::string& strategy) {
  json j;
  j["colors"] = c.colors;
  if (!strategy.empty()) j["strategy"] = strategy;
  return j.dump(2) + "\n";
}

Graph parse_graph_json(const std::string& text) {
  const std::string what = "graph document";
  json j = parse_doc(text, what);
  int n = int_field(j, "n", what);
  const json& es = field(j, "edges", what);
  if (!es.is_array()) throw InputError(what + ": \"edges\" must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const json& e : es) {
    std::vector<int> uv = int_array(e, what + " edge");
    if (uv.size() != 2) throw InputError(what + ": each edge must be a pair [u, v]");
    edges.push_back({uv[0], uv[1]});
  }
  return Graph::make(n, edges);
}

std::string graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.n;
  json es = json::array();
  for (const auto& [u, v] : g.edges()) es.push_back(json::array({u, v}));
  j["edges"] = es;
  return j.dump(2) + "\n";
}

std::vector<RatPoint> parse_points_json(const std::string& text) {
  const std::string what = "points document";
  json j = parse_doc(text, what);
  const json& ps = field(j, "points", what);
  if (!ps.is_array()) throw InputError(what + ": \"points\" must be an array");
  std::vector<RatPoint> out;
  out.reserve(ps.size());
  for (const json& p : ps) {
    if (!p.is_array() || p.size() != 2)
      throw InputError(what + ": each point must be a pair [x, y]");
    json wrapped;
    wrapped["x"] = p[0];
    wrapped["y"] = p[1];
    out.push_back(RatPoint{rational_field(wrapped, "x", what),
                           rational_field(wrapped, "y", what)});
  }
  return out;
}

std::string points_to_json(const std::vector<RatPoint>& pts) {
  json ps = json::array();
  for (const RatPoint& p : pts)
    ps.push_back(json::array({format_rational(p.x), format_rational(p.y)}));
  json j;
  j["points"] = ps;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Query streams
// ---------------------------------------------------------------------------

std::vector<Range> parse_interval_queries(const std::string& text) {
  const std::string what = "interval query";
  std::vector<Range> out;
  for (const std::string& line : split_lines(text)) {
    json j = parse_doc(line, what);
    int lo = int_field(j, "lo", what);
    int hi = int_field(j, "hi", what);
    out.push_back(make_interval(lo, hi));
  }
  return out;
}

std::string interval_queries_to_jsonl(const std::vector<Range>& intervals) {
  std::string out;
  for (const Range& r : intervals) {
    if (r.empty()) throw InputError("interval query: cannot serialize an empty range");
    json j;
    j["lo"] = r.front();
    j["hi"] = r.back();
    out += j.dump() + "\n";
  }
  return out;
}

std::vector<HalfPlaneQuery> parse_halfplane_queries(const std::string& text) {
  const std::string what = "half-plane query";
  std::vector<HalfPlaneQuery> out;
  for (const std::string& line : split_lines(text)) {
    json j = parse_doc(line, what);
    HalfPlaneQuery q{rational_field(j, "a", what), rational_field(j, "b", what),
                     rational_field(j, "c", what), parse_side(j, what)};
    validate_query(q);
    out.push_back(std::move(q));
  }
  return out;
}

std::string halfplane_queries_to_jsonl(const std::vector<HalfPlaneQuery>& qs) {
  std::string out;
  for (const HalfPlaneQuery& q : qs) {
    json j;
    j["a"] = format_rational(q.a);
    j["b"] = format_rational(q.b);
    j["c"] = format_rational(q.c);
    j["side"] = side_tag(q.side);
    out += j.dump() + "\n";
  }
  return out;
}

std::vector<DiscQuery> parse_disc_queries(const std::string& text) {
  const std::string what = "disc query";
  std::vector<DiscQuery> out;
  for (const std::string& line : split_lines(text)) {
    json j = parse_doc(line, what);
    out.push_back(DiscQuery{RatPoint{rational_field(j, "cx", what),
                                     rational_field(j, "cy", what)}});
  }
  return out;
}

std::string disc_queries_to_jsonl(const std::vector<DiscQuery>& qs) {
  std::string out;
  for (const DiscQuery& q : qs) {
    json j;
    j["cx"] = format_rational(q.center.x);
    j["cy"] = format_rational(q.center.y);
    out += j.dump() + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Forests and reports
// ---------------------------------------------------------------------------

namespace {

json forest_node_to_json(const ForestNode& node) {
  json j;
  j["range"] = node.range;
  j["point"] = node.point;
  j["depth"] = node.depth;
  json kids = json::array();
  for (const ForestNode& c : node.children) kids.push_back(forest_node_to_json(c));
  j["children"] = kids;
  return j;
}

}  // namespace

std::string forest_to_json(const DecompositionForest& f) {
  json j;
  j["max_depth"] = f.max_depth;
  j["node_count"] = f.node_count;
  json roots = json::array();
  for (const ForestNode& r : f.roots) roots.push_back(forest_node_to_json(r));
  j["roots"] = roots;
  return j.dump(2) + "\n";
}

std::string ratio_report_to_json(const RatioReport& r) {
  json j;
  j["alg_size"] = r.alg_size;
  j["opt_size"] = r.opt_size;
  j["ratio"] = format_rational(r.ratio);
  if (r.bound) {
    json b;
    b["name"] = r.bound->name;
    b["bound"] = format_rational(r.bound->bound);
    b["pass"] = r.bound->pass;
    j["bound"] = b;
  }
  return j.dump(2) + "\n";
}

std::string ratio_report_csv_header() {
  return "instance,n,alg,alg_size,opt_size,ratio,bound,pass\n";
}

std::string ratio_report_csv_row(const std::string& instance_id, int n, const std::string& alg,
                                 const RatioReport& r) {
  std::string row = instance_id + "," + std::to_string(n) + "," + alg + "," +
                    std::to_string(r.alg_size) + "," + std::to_string(r.opt_size) + "," +
                    format_rational(r.ratio) + ",";
  if (r.bound) {
    row += r.bound->name;
    row += r.bound->pass ? ",pass" : ",fail";
  } else {
    row += "-,-";
  }
  return row + "\n";
}

// ---------------------------------------------------------------------------
// Transcripts
// ---------------------------------------------------------------------------

namespace {

template <typename Query, typename QueryWriter>
json transcript_doc(const Transcript<Query>& t, const char* kind, QueryWriter&& write_query) {
  json j;
  j["kind"] = kind;
  json events = json::array();
  for (const auto& ev : t.events) {
    json e;
    e["query"] = write_query(ev.query);
    e["range"] = ev.range;
    e["was_stabbed"] = ev.was_stabbed;
    e["added"] = ev.added;
    e["size_after"] = ev.size_after;
    events.push_back(std::move(e));
  }
  j["events"] = events;
  j["final_set"] = t.final_set.points;
  return j;
}

json expect_kind(const std::string& text, const char* kind) {
  const std::string what = std::string(kind) + " transcript";
  json j = parse_doc(text, what);
  const json& k = field(j, "kind", what);
  if (!k.is_string() || k.get<std::string>() != kind)
    throw InputError(what + ": wrong or missing kind tag");
  return j;
}

template <typename Query, typename QueryReader>
Transcript<Query> transcript_from_doc(const json& j, const std::string& what,
                                      QueryReader&& read_query) {
  Transcript<Query> t;
  const json& events = field(j, "events", what);
  if (!events.is_array()) throw InputError(what + ": \"events\" must be an array");
  for (const json& e : events) {
    TranscriptEvent<Query> ev;
    ev.query = read_query(field(e, "query", what));
    ev.range = int_array(field(e, "range", what), what);
    const json& ws = field(e, "was_stabbed", what);
    if (!ws.is_boolean()) throw InputError(what + ": \"was_stabbed\" must be a boolean");
    ev.was_stabbed = ws.get<bool>();
    ev.added = int_array(field(e, "added", what), what);
    ev.size_after = int_field(e, "size_after", what);
    t.events.push_back(std::move(ev));
  }
  for (int p : int_array(field(j, "final_set", what), what)) t.final_set.insert(p);
  return t;
}

}  // namespace

std::string transcript_to_json(const Transcript<Range>& t) {
  return transcript_doc(t, "ranges", [](const Range& r) { return json(r); }).dump(2) + "\n";
}

std::string transcript_to_json(const Transcript<HalfPlaneQuery>& t) {
  auto write = [](const HalfPlaneQuery& q) {
    json j;
    j["a"] = format_rational(q.a);
    j["b"] = format_rational(q.b);
    j["c"] = format_rational(q.c);
    j["side"] = side_tag(q.side);
    return j;
  };
  return transcript_doc(t, "halfplane", write).dump(2) + "\n";
}

std::string transcript_to_json(const Transcript<DiscQuery>& t) {
  auto write = [](const DiscQuery& q) {
    json j;
    j["cx"] = format_rational(q.center.x);
    j["cy"] = format_rational(q.center.y);
    return j;
  };
  return transcript_doc(t, "disc", write).dump(2) + "\n";
}

Transcript<HalfPlaneQuery> parse_halfplane_transcript(const std::string& text) {
  const std::string what = "halfplane transcript";
  json j = expect_kind(text, "halfplane");
  auto read = [&what](const json& q) {
    HalfPlaneQuery hq{rational_field(q, "a", what), rational_field(q, "b", what),
                      rational_field(q, "c", what), parse_side(q, what)};
    validate_query(hq);
    return hq;
  };
  return transcript_from_doc<HalfPlaneQuery>(j, what, read);
}

Transcript<DiscQuery> parse_disc_transcript(const std::string& text) {
  const std::string what = "disc transcript";
  json j = expect_kind(text, "disc");
  auto read = [&what](const json& q) {
    return DiscQuery{RatPoint{rational_field(q, "cx", what), rational_field(q, "cy", what)}};
  };
  return transcript_from_doc<DiscQuery>(j, what, read);
}

// ---------------------------------------------------------------------------
// SVG plots
// ---------------------------------------------------------------------------

namespace {

/// Maps plane coordinates into a y-flipped pixel frame of width <= 640.
struct SvgFrame {
  double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
  double scale = 1;

  void fit(double margin) {
    if (max_x - min_x < 1e-9) max_x = min_x + 1;
    if (max_y - min_y < 1e-9) max_y = min_y + 1;
    min_x -= margin;
    min_y -= margin;
    max_x += margin;
    max_y += margin;
    scale = 640.0 / std::max(max_x - min_x, max_y - min_y);
  }
  void cover(double x, double y) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  double width() const { return (max_x - min_x) * scale; }
  double height() const { return (max_y - min_y) * scale; }
  double px(double x) const { return (x - min_x) * scale; }
  double py(double y) const { return (max_y - y) * scale; }
};

std::string fmt(double v) {
  if (std::fabs(v) < 5e-5) v = 0;  // avoid "-0.0000"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

void svg_open(std::string& out, const SvgFrame& f) {
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(f.width()) +
         "\" height=\"" + fmt(f.height()) + "\" viewBox=\"0 0 " + fmt(f.width()) + " " +
         fmt(f.height()) + "\">\n";
  out += "<style>.pt{fill:#1a1a1a}.stab{fill:#cc2b2b;stroke:#7a0f0f;stroke-width:1}"
         ".env{fill:none;stroke:#888;stroke-width:1.5}"
         ".q{fill:none;stroke:#2b66cc;stroke-width:1;opacity:0.65}"
         ".qa{stroke-dasharray:6 4}"
         ".tile{fill:none;stroke:#c8c8c8;stroke-width:1}"
         ".quad{fill:#7a4fbf}</style>\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
}

void svg_points(std::string& out, const SvgFrame& f, const std::vector<RatPoint>& pts,
                const HittingSet& chosen) {
  for (size_t i = 0; i < pts.size(); ++i) {
    bool stab = chosen.contains(static_cast<PointId>(i));
    out += "<circle class=\"" + std::string(stab ? "stab" : "pt") + "\" cx=\"" +
           fmt(f.px(to_double(pts[i].x))) + "\" cy=\"" + fmt(f.py(to_double(pts[i].y))) +
           "\" r=\"" + (stab ? "4.5" : "3") + "\"/>\n";
  }
}

}  // namespace

std::string halfplane_svg(const HalfPlaneInstance& inst,
                          const std::vector<HalfPlaneQuery>& queries,
                          const HittingSet& chosen) {
  SvgFrame f;
  bool first = true;
  for (const RatPoint& p : inst.points) {
    double x = to_double(p.x), y = to_double(p.y);
    if (first) {
      f.min_x = f.max_x = x;
      f.min_y = f.max_y = y;
      first = false;
    }
    f.cover(x, y);
  }
  f.fit(first ? 1.0 : 0.75);

  std::string out;
  svg_open(out, f);

  auto envelope = [&](const std::vector<PointId>& extreme) {
    if (extreme.size() < 2) return;
    out += "<polyline class=\"env\" points=\"";
    for (size_t i = 0; i < extreme.size(); ++i) {
      const RatPoint& p = inst.points[static_cast<size_t>(extreme[i])];
      if (i) out += " ";
      out += fmt(f.px(to_double(p.x))) + "," + fmt(f.py(to_double(p.y)));
    }
    out += "\"/>\n";
  };
  envelope(inst.lower_extreme);
  envelope(inst.upper_extreme);

  for (const HalfPlaneQuery& q : queries) {
    double a = to_double(q.a), b = to_double(q.b), c = to_double(q.c);
    double x1, y1, x2, y2;
    if (std::fabs(b) < 1e-12) {
      x1 = x2 = c / a;
      y1 = f.min_y;
      y2 = f.max_y;
    } else {
      x1 = f.min_x;
      x2 = f.max_x;
      y1 = (c - a * x1) / b;
      y2 = (c - a * x2) / b;
    }
    out += "<line class=\"q" + std::string(q.side == Side::above ? " qa" : "") + "\" x1=\"" +
           fmt(f.px(x1)) + "\" y1=\"" + fmt(f.py(y1)) + "\" x2=\"" + fmt(f.px(x2)) +
           "\" y2=\"" + fmt(f.py(y2)) + "\"/>\n";
  }

  svg_points(out, f, inst.points, chosen);
  out += "</svg>\n";
  return out;
}

std::string disc_svg(const DiscInstance& inst, const std::vector<DiscQuery>& queries,
                     const HittingSet& chosen) {
  SvgFrame f;
  bool first = true;
  auto cover = [&](double x, double y) {
    if (first) {
      f.min_x = f.max_x = x;
      f.min_y = f.max_y = y;
      first = false;
    }
    f.cover(x, y);
  };
  for (const RatPoint& p : inst.points) cover(to_double(p.x), to_double(p.y));
  for (const auto& kv : inst.tiles) {
    double cx = to_double(kv.second.center.x), cy = to_double(kv.second.center.y);
    cover(cx - 0.25, cy - 0.25);
    cover(cx + 0.25, cy + 0.25);
    for (const RatPoint& qc : kv.second.quad_centers)
      cover(to_double(qc.x), to_double(qc.y));
  }
  for (const DiscQuery& q : queries) {
    double cx = to_double(q.center.x), cy = to_double(q.center.y);
    cover(cx - 1, cy - 1);
    cover(cx + 1, cy + 1);
  }
  f.fit(first ? 1.0 : 0.5);

  std::string out;
  svg_open(out, f);

  for (const auto& kv : inst.tiles) {
    double cx = to_double(kv.second.center.x), cy = to_double(kv.second.center.y);
    out += "<rect class=\"tile\" x=\"" + fmt(f.px(cx - 0.25)) + "\" y=\"" +
           fmt(f.py(cy + 0.25)) + "\" width=\"" + fmt(0.5 * f.scale) + "\" height=\"" +
           fmt(0.5 * f.scale) + "\"/>\n";
    for (const RatPoint& qc : kv.second.quad_centers)
      out += "<circle class=\"quad\" cx=\"" + fmt(f.px(to_double(qc.x))) + "\" cy=\"" +
             fmt(f.py(to_double(qc.y))) + "\" r=\"2\"/>\n";
  }

  for (const DiscQuery& q : queries)
    out += "<circle class=\"q\" cx=\"" + fmt(f.px(to_double(q.center.x))) + "\" cy=\"" +
           fmt(f.py(to_double(q.center.y))) + "\" r=\"" + fmt(f.scale) + "\"/>\n";

  svg_points(out, f, inst.points, chosen);
  out += "</svg>\n";
  return out;
}

}  // namespace hitsets
