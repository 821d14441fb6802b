#include "holocolor/circle_layers.hpp"

#include <algorithm>
#include <sstream>

#include "holocolor/error.hpp"
#include "text_util.hpp"

namespace holocolor {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw ParseError("malformed number '" + std::string(text) + "'");
  boost::multiprecision::cpp_int n(std::string{num}), d(std::string{den});
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

CircleLayers::CircleLayers(Rational circumference, std::vector<std::vector<Rational>> layers)
    : circumference_(std::move(circumference)), layers_(std::move(layers)) {
  if (circumference_ <= 0) throw DomainError("circumference must be positive");
  if (layers_.empty()) throw DomainError("at least one layer is required");
  std::vector<Rational> all;
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    auto& layer = layers_[i];
    if (layer.size() < 2)
      throw DomainError("layer " + std::to_string(i + 1) + " needs at least 2 boundary points");
    for (const auto& p : layer)
      if (p < 0 || p >= circumference_)
        throw DomainError("position " + format_rational(p) + " is outside [0, C)");
    std::sort(layer.begin(), layer.end());
    all.insert(all.end(), layer.begin(), layer.end());
  }
  std::sort(all.begin(), all.end());
  if (auto dup = std::adjacent_find(all.begin(), all.end()); dup != all.end())
    throw DomainError("duplicate position " + format_rational(*dup));
}

std::vector<Arc> CircleLayers::arcs() const {
  std::vector<Arc> out;
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    const auto& pts = layers_[i];
    for (std::size_t t = 0; t < pts.size(); ++t) {
      Arc a;
      a.id = out.size();
      a.layer = static_cast<int>(i) + 1;
      a.start = pts[t];
      a.end = t + 1 < pts.size() ? pts[t + 1] : Rational(pts.front() + circumference_);
      out.push_back(std::move(a));
    }
  }
  return out;
}

std::size_t CircleLayers::arc_count() const {
  std::size_t n = 0;
  for (const auto& l : layers_) n += l.size();
  return n;
}

CircleLayers CircleLayers::double_cover() const {
  std::vector<std::vector<Rational>> layers;
  for (const auto& l : layers_) {
    std::vector<Rational> doubled = l;
    for (const auto& p : l) doubled.push_back(p + circumference_);
    layers.push_back(std::move(doubled));
  }
  return CircleLayers(circumference_ * 2, std::move(layers));
}

CircleLayers parse_circle_layers(std::string_view text) {
  std::vector<std::string_view> body;
  std::vector<std::size_t> line_numbers;
  std::size_t line_no = 0;
  for (auto line : detail::split_lines(text)) {
    ++line_no;
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    body.push_back(line);
    line_numbers.push_back(line_no);
  }
  if (body.empty()) throw ParseError("empty circle-layers file");

  auto head = detail::split_ws(body[0]);
  if (head.size() != 2 || head[0] != "circle") throw ParseError("expected 'circle <j>'", line_numbers[0]);
  auto j = detail::parse_uint(head[1]);
  if (!j || *j < 1 || *j > 64) throw ParseError("invalid layer count", line_numbers[0]);

  if (body.size() < 2 || body[1].substr(0, 2) != "C=") throw ParseError("expected 'C=<rational>'", line_numbers.size() > 1 ? line_numbers[1] : line_numbers[0]);
  Rational circumference;
  try {
    circumference = parse_rational(detail::trim(body[1].substr(2)));
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line_numbers[1]);
  }

  if (body.size() != 2 + *j)
    throw ParseError("expected " + std::to_string(*j) + " layer lines, got " + std::to_string(body.size() - 2));
  std::vector<std::vector<Rational>> layers;
  for (std::size_t i = 2; i < body.size(); ++i) {
    if (body[i].substr(0, 6) != "layer:") throw ParseError("expected 'layer: p1 p2 ...'", line_numbers[i]);
    std::vector<Rational> pts;
    for (auto tok : detail::split_ws(body[i].substr(6))) {
      try {
        pts.push_back(parse_rational(tok));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_numbers[i]);
      }
    }
    layers.push_back(std::move(pts));
  }
  try {
    return CircleLayers(std::move(circumference), std::move(layers));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_circle_layers(const CircleLayers& cl) {
  std::ostringstream out;
  out << "circle " << cl.layer_count() << '\n' << "C=" << format_rational(cl.circumference()) << '\n';
  for (const auto& layer : cl.layers()) {
    out << "layer:";
    for (const auto& p : layer) out << ' ' << format_rational(p);
    out << '\n';
  }
  return out.str();
}

void LayerState::cross(int layer) {
  std::swap(layer_color.at(static_cast<std::size_t>(layer - 1)), free_color);
}

LayerState initial_layer_state(int layers) {
  LayerState s;
  for (int i = 1; i <= layers; ++i) s.layer_color.push_back(i);
  s.free_color = layers + 1;
  return s;
}

std::vector<SweepEvent> sweep_events(const CircleLayers& cl, SweepDirection direction) {
  std::vector<SweepEvent> events;
  for (int i = 1; i <= cl.layer_count(); ++i)
    for (const auto& p : cl.layer(i)) events.push_back({p, i});
  // Position 0 is reached at the end of an increasing sweep from 0+.
  auto key = [&](const SweepEvent& e) { return e.position == 0 ? cl.circumference() : e.position; };
  std::sort(events.begin(), events.end(), [&](const SweepEvent& a, const SweepEvent& b) { return key(a) < key(b); });
  if (direction == SweepDirection::kDecreasing) std::reverse(events.begin(), events.end());
  return events;
}

LayerState run_sweep(int layers, const std::vector<SweepEvent>& events) {
  auto state = initial_layer_state(layers);
  for (const auto& e : events) state.cross(e.layer);
  return state;
}

Permutation sweep_permutation(const LayerState& start, const LayerState& end) {
  const std::size_t j = start.layer_color.size();
  std::vector<int> images(j + 1);
  for (std::size_t i = 0; i < j; ++i) images[static_cast<std::size_t>(start.layer_color[i] - 1)] = end.layer_color[i];
  images[static_cast<std::size_t>(start.free_color - 1)] = end.free_color;
  return Permutation(std::move(images));
}

Permutation circle_holonomy(const CircleLayers& cl, SweepDirection direction) {
  const int j = cl.layer_count();
  return sweep_permutation(initial_layer_state(j), run_sweep(j, sweep_events(cl, direction)));
}

std::optional<ArcColoring> circle_colorable(const CircleLayers& cl) {
  const int j = cl.layer_count();
  auto events = sweep_events(cl);
  if (!sweep_permutation(initial_layer_state(j), run_sweep(j, events)).is_identity()) return std::nullopt;

  // Arc ids run layer by layer; the arc leaving point t of layer i takes the
  // color that layer holds right after the crossing.
  std::vector<std::size_t> first_arc(static_cast<std::size_t>(j) + 1, 0);
  for (int i = 1; i < j; ++i) first_arc[static_cast<std::size_t>(i)] = first_arc[static_cast<std::size_t>(i - 1)] + cl.layer(i).size();
  ArcColoring f(cl.arc_count(), 0);
  auto state = initial_layer_state(j);
  for (const auto& e : events) {
    state.cross(e.layer);
    const auto& pts = cl.layer(e.layer);
    auto t = static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), e.position) - pts.begin());
    f[first_arc[static_cast<std::size_t>(e.layer - 1)] + t] = state.layer_color[static_cast<std::size_t>(e.layer - 1)];
  }
  return f;
}

bool arcs_meet(const Arc& a, const Arc& b, const Rational& circumference) {
  for (int shift = -1; shift <= 1; ++shift) {
    Rational offset = circumference * shift;
    Rational lo = std::max(a.start, Rational(b.start + offset));
    Rational hi = std::min(a.end, Rational(b.end + offset));
    if (lo <= hi) return true;
  }
  return false;
}

bool verify_arc_coloring(const CircleLayers& cl, const ArcColoring& f, int colors) {
  const auto arcs = cl.arcs();
  if (f.size() != arcs.size())
    throw DomainError("coloring has " + std::to_string(f.size()) + " entries for " + std::to_string(arcs.size()) + " arcs");
  for (Color c : f)
    if (c < 1 || c > colors) return false;
  for (std::size_t x = 0; x < arcs.size(); ++x)
    for (std::size_t y = x + 1; y < arcs.size(); ++y)
      if (f[x] == f[y] && arcs_meet(arcs[x], arcs[y], cl.circumference())) return false;
  return true;
}

}  // namespace holocolor
