#include "a22/bijection.hpp"

#include <algorithm>

namespace a22::bij {

bool letters_valid(const std::string& letters) {
  if (letters.empty()) return false;
  if (letters.front() == 'V') return false;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const char ch = letters[i];
    if (ch != 'O' && ch != 'U' && ch != 'V') return false;
    if (ch == 'V' && i > 0 && letters[i - 1] == 'U') return false;
  }
  return true;
}

void require_letters(const std::string& letters) {
  if (!letters_valid(letters))
    throw std::invalid_argument("invalid letter sequence: " + letters);
}

std::string pair_to_letters(const dyck::CompatiblePair& sel) {
  std::string out(sel.n + 1, 'O');
  for (int i : sel.s1) out[i] = 'U';
  for (int j : sel.s2) {
    if (out[j] == 'U')
      throw IncompatiblePair("u and v selected at the same index");
    out[j] = 'V';
  }
  require_letters(out);
  return out;
}

dyck::CompatiblePair letters_to_pair(const std::string& letters) {
  require_letters(letters);
  dyck::CompatiblePair sel;
  sel.n = static_cast<int>(letters.size()) - 1;
  for (int i = 0; i <= sel.n; ++i) {
    if (letters[i] == 'U') sel.s1.push_back(i);
    if (letters[i] == 'V') sel.s2.push_back(i);
  }
  return sel;
}

std::string matching_to_letters(const snake::PerfectMatching& p) {
  if (p.n % 2 != 1)
    throw std::invalid_argument("matching must live on H_{2n+1}");
  const snake::SnakeGraph g = snake::build(p.n);
  if (!snake::is_perfect_matching(g, p))
    throw std::invalid_argument("not a perfect matching of H_{2n+1}");
  const int n = (p.n - 1) / 2;
  auto has = [&](snake::Edge e) {
    return std::find(p.edges.begin(), p.edges.end(), e) != p.edges.end();
  };
  std::string out(n + 1, 'O');
  for (int i = 0; i <= n; ++i) {
    if (has({snake::Edge::kSideA, 2 * i}))
      out[i] = 'U';
    else if (i >= 1 && has({snake::Edge::kSideA, 2 * i - 1}))
      out[i] = 'V';
    // otherwise the rung at column 2i is present: letter O
  }
  require_letters(out);
  return out;
}

nondec::NonDecPath letters_to_path(const std::string& letters) {
  require_letters(letters);
  const int n = static_cast<int>(letters.size()) - 1;
  // split into blocks [U^a O V^b], trailing block has U's only
  nondec::NonDecPath path;
  int sum_d = 0, sum_e = 0;
  std::size_t i = 0;
  while (i < letters.size()) {
    int a = 0, b = 0;
    while (i < letters.size() && letters[i] == 'U') {
      ++a;
      ++i;
    }
    if (i == letters.size()) break;  // trailing U-only block
    ++i;  // the block's O
    while (i < letters.size() && letters[i] == 'V') {
      ++b;
      ++i;
    }
    path.mountains.push_back({a + b + 1, a + 1});
    sum_d += a + b + 1;
    sum_e += a + 1;
  }
  path.mountains.push_back({n + 2 - sum_d, n + 2 - sum_e});
  nondec::validate(path);
  return path;
}

std::string path_to_letters(const nondec::NonDecPath& p) {
  nondec::validate(p);
  std::string out;
  const std::size_t k1 = p.mountains.size();
  for (std::size_t i = 0; i + 1 < k1; ++i) {
    const int a = p.mountains[i].e - 1;
    const int b = p.mountains[i].d - p.mountains[i].e;
    out.append(a, 'U');
    out.push_back('O');
    out.append(b, 'V');
  }
  out.append(p.mountains[k1 - 1].d - 1, 'U');
  require_letters(out);
  return out;
}

dyck::CompatiblePair phi(const snake::PerfectMatching& p) {
  return letters_to_pair(matching_to_letters(p));
}

snake::PerfectMatching phi_inv(const dyck::CompatiblePair& sel) {
  if (!dyck::is_compatible_fast(sel))
    throw IncompatiblePair("selection fails the gap criterion");
  snake::PerfectMatching m;
  m.n = 2 * sel.n + 1;
  std::vector<bool> covered(m.n + 1, false);
  auto side_pair = [&](int pos) {
    m.edges.push_back({snake::Edge::kSideA, pos});
    m.edges.push_back({snake::Edge::kSideB, pos});
    covered[pos] = covered[pos + 1] = true;
  };
  for (int i : sel.s1) side_pair(2 * i);
  for (int j : sel.s2) side_pair(2 * j - 1);
  for (int c = 0; c <= m.n; ++c)
    if (!covered[c]) m.edges.push_back({snake::Edge::kRung, c});
  std::sort(m.edges.begin(), m.edges.end(),
            [](const snake::Edge& a, const snake::Edge& b) {
              return std::pair(a.pos, a.kind) < std::pair(b.pos, b.kind);
            });
  return m;
}

nondec::NonDecPath theta(const dyck::CompatiblePair& sel) {
  return letters_to_path(pair_to_letters(sel));
}

dyck::CompatiblePair theta_inv(const nondec::NonDecPath& p) {
  if (p.half_length() < 2)
    throw std::invalid_argument("theta^-1 needs a path of length >= 4");
  return letters_to_pair(path_to_letters(p));
}

nondec::NonDecPath psi(const snake::PerfectMatching& p) {
  return letters_to_path(matching_to_letters(p));
}

}  // namespace a22::bij
