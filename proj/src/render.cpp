#include "a22/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace a22::render {

namespace {

bool contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

std::string pair_ascii(const dyck::CompatiblePair& sel) {
  const dyck::MaxDyckPath path = dyck::family_path(sel.n);
  const int a1 = path.a1(), a2 = path.a2();
  std::vector<std::string> rows(a2 + 1, std::string(a1 + 1, ' '));
  // row r shows lattice height y = a2 - r; '_' sits on its row's baseline
  for (const dyck::Step& s : path.word()) {
    if (s.horizontal) {
      const dyck::Point left = path.vertex(path.horizontal_position(s.index));
      const bool sel1 = contains(sel.s1, s.index - 1);  // 0-based family index
      rows[a2 - left.y][left.x + 1] = sel1 ? '=' : '_';
    } else {
      const dyck::Point bottom = path.vertex(path.vertical_position(s.index));
      rows[a2 - bottom.y - 1][bottom.x] = contains(sel.s2, s.index) ? '!' : '|';
    }
  }
  std::string out;
  for (const std::string& row : rows) {
    std::string trimmed = row;
    while (!trimmed.empty() && trimmed.back() == ' ') trimmed.pop_back();
    out += trimmed;
    out += '\n';
  }
  return out;
}

std::string pair_svg(const dyck::CompatiblePair& sel) {
  const dyck::MaxDyckPath path = dyck::family_path(sel.n);
  const int a1 = path.a1(), a2 = path.a2();
  const int scale = 24, margin = 12;
  const int w = a1 * scale + 2 * margin, h = a2 * scale + 2 * margin;
  auto px = [&](int x) { return margin + x * scale; };
  auto py = [&](int y) { return margin + (a2 - y) * scale; };
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h
      << "\">\n";
  for (int x = 0; x <= a1; ++x)
    svg << "  <line x1=\"" << px(x) << "\" y1=\"" << py(0) << "\" x2=\""
        << px(x) << "\" y2=\"" << py(a2)
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  for (int y = 0; y <= a2; ++y)
    svg << "  <line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\""
        << px(a1) << "\" y2=\"" << py(y)
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  svg << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\""
      << px(a1) << "\" y2=\"" << py(a2)
      << "\" stroke=\"#4040ff\" stroke-width=\"1\"/>\n";
  for (const dyck::Step& s : path.word()) {
    int pos = s.horizontal ? path.horizontal_position(s.index)
                           : path.vertical_position(s.index);
    const dyck::Point from = path.vertex(pos);
    const dyck::Point to = s.horizontal ? dyck::Point{from.x + 1, from.y}
                                        : dyck::Point{from.x, from.y + 1};
    const char* color = "#000000";
    int width = 3;
    if (s.horizontal && contains(sel.s1, s.index - 1)) {
      color = "#00a000";
      width = 5;
    } else if (!s.horizontal && contains(sel.s2, s.index)) {
      color = "#d00000";
      width = 5;
    }
    svg << "  <line x1=\"" << px(from.x) << "\" y1=\"" << py(from.y)
        << "\" x2=\"" << px(to.x) << "\" y2=\"" << py(to.y) << "\" stroke=\""
        << color << "\" stroke-width=\"" << width << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string path_ascii(const nondec::NonDecPath& p) {
  return nondec::to_steps(p) + "\n";
}

std::string path_svg(const nondec::NonDecPath& p) {
  nondec::validate(p);
  const std::string steps = nondec::to_steps(p);
  const int n2 = static_cast<int>(steps.size());
  int alt = 0, peak = 0;
  for (char c : steps) {
    alt += c == '/' ? 1 : -1;
    peak = std::max(peak, alt);
  }
  const int scale = 20, margin = 12;
  const int w = n2 * scale + 2 * margin, h = peak * scale + 2 * margin;
  auto px = [&](int x) { return margin + x * scale; };
  auto py = [&](int y) { return margin + (peak - y) * scale; };
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h
      << "\">\n";
  for (int y = 0; y <= peak; ++y)
    svg << "  <line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\""
        << px(n2) << "\" y2=\"" << py(y)
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  svg << "  <polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"2\" "
         "points=\"";
  alt = 0;
  svg << px(0) << "," << py(0);
  for (int i = 0; i < n2; ++i) {
    alt += steps[i] == '/' ? 1 : -1;
    svg << " " << px(i + 1) << "," << py(alt);
  }
  svg << "\"/>\n";
  // valley markers
  alt = 0;
  for (int i = 0; i + 1 < n2; ++i) {
    alt += steps[i] == '/' ? 1 : -1;
    if (steps[i] == '\\' && steps[i + 1] == '/')
      svg << "  <circle cx=\"" << px(i + 1) << "\" cy=\"" << py(alt)
          << "\" r=\"4\" fill=\"#d00000\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace a22::render
