#include "hexarep/gmodels.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace hexarep::gmodels {

namespace {

std::string duad_label(int i, int j) {
  if (i > j) std::swap(i, j);
  return "{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

}  // namespace

fgeom::PartialLinearSpace build_duad_q52() {
  std::vector<std::string> labels;
  std::map<std::pair<int, int>, int> duad_index;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      duad_index[{i, j}] = static_cast<int>(labels.size());
      labels.push_back(duad_label(i, j));
    }
  const int omega0 = static_cast<int>(labels.size());
  for (int i = 1; i <= 6; ++i) labels.push_back(std::to_string(i));
  const int omega1 = static_cast<int>(labels.size());
  for (int i = 1; i <= 6; ++i) labels.push_back(std::to_string(i) + "'");

  auto duad = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    return duad_index.at({i, j});
  };

  std::vector<std::array<int, 3>> lines;
  // 15 partitions of {1..6} into three duads. 1 pairs with j; the remaining
  // four symbols split in three ways.
  for (int j = 2; j <= 6; ++j) {
    std::array<int, 4> rest{};
    int k = 0;
    for (int x = 2; x <= 6; ++x)
      if (x != j) rest[static_cast<size_t>(k++)] = x;
    const std::array<std::array<int, 4>, 3> splits{{
        {rest[0], rest[1], rest[2], rest[3]},
        {rest[0], rest[2], rest[1], rest[3]},
        {rest[0], rest[3], rest[1], rest[2]},
    }};
    for (const auto& sp : splits) {
      std::array<int, 3> ln{duad(1, j), duad(sp[0], sp[1]), duad(sp[2], sp[3])};
      std::sort(ln.begin(), ln.end());
      lines.push_back(ln);
    }
  }
  std::sort(lines.begin(), lines.end());
  // 30 mixed lines {i, {i,j}, j'}.
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      if (i == j) continue;
      lines.push_back({omega0 + i - 1, duad(i, j), omega1 + j - 1});
    }
  return fgeom::PartialLinearSpace("Q(5,2) duad model", std::move(labels),
                                   std::move(lines));
}

fgeom::Spread canonical_spread(const fgeom::PartialLinearSpace& duad) {
  const std::array<std::array<const char*, 3>, 9> spec{{
      {"{1,2}", "{3,4}", "{5,6}"},
      {"{1,4}", "1", "4'"},
      {"{2,6}", "2", "6'"},
      {"{1,6}", "{2,4}", "{3,5}"},
      {"{1,5}", "1'", "5"},
      {"{2,3}", "2'", "3"},
      {"{1,3}", "{2,5}", "{4,6}"},
      {"{3,6}", "3'", "6"},
      {"{4,5}", "4", "5'"},
  }};
  fgeom::Spread out;
  for (const auto& triple : spec) {
    const int p = duad.point_index(triple[0]);
    const int q = duad.point_index(triple[1]);
    if (p < 0 || q < 0)
      throw Fault("canonical_spread: labelled point missing from the model");
    const int l = duad.line_on(p, q);
    if (l < 0 || !duad.line_contains(l, duad.point_index(triple[2])))
      throw Fault("canonical_spread: listed line absent from the model");
    out.lines.push_back(l);
  }
  return out;
}

std::uint8_t elliptic_q(std::uint32_t v) {
  const auto b = [&](int i) { return (v >> (i - 1)) & 1u; };
  return static_cast<std::uint8_t>(
      (b(1) & b(2)) ^ (b(3) & b(4)) ^ b(5) ^ (b(5) & b(6)) ^ b(6));
}

const std::array<std::uint32_t, 6>& elliptic_polarization() {
  // g(x,y) = x1y2 + x2y1 + x3y4 + x4y3 + x5y6 + x6y5
  static const std::array<std::uint32_t, 6> rows{
      0b000010, 0b000001, 0b001000, 0b000100, 0b100000, 0b010000};
  return rows;
}

std::uint8_t elliptic_g(std::uint32_t u, std::uint32_t v) {
  const auto& rows = elliptic_polarization();
  std::uint8_t acc = 0;
  for (std::uint32_t rest = u; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    acc ^= static_cast<std::uint8_t>(std::popcount(rows[static_cast<size_t>(i)] & v) & 1);
  }
  return acc;
}

QuadricModel build_quadric_q52() {
  std::vector<std::uint32_t> coords;
  std::vector<std::string> labels;
  std::vector<int> index_of(64, -1);
  for (std::uint32_t v = 1; v < 64; ++v) {
    if (elliptic_q(v) == 0) {
      index_of[v] = static_cast<int>(coords.size());
      labels.push_back("m" + std::to_string(v));
      coords.push_back(v);
    }
  }
  std::vector<std::array<int, 3>> lines;
  for (size_t a = 0; a < coords.size(); ++a)
    for (size_t b = a + 1; b < coords.size(); ++b) {
      const std::uint32_t w = coords[a] ^ coords[b];
      if (w > coords[b] && index_of[w] >= 0)
        lines.push_back({static_cast<int>(a), static_cast<int>(b), index_of[w]});
    }
  QuadricModel out{
      fgeom::PartialLinearSpace("Q(5,2) elliptic quadric", std::move(labels),
                                std::move(lines)),
      std::move(coords), "x1x2+x3x4+x5^2+x5x6+x6^2"};
  return out;
}

std::optional<std::vector<int>> find_isomorphism(
    const fgeom::PartialLinearSpace& a, const fgeom::PartialLinearSpace& b) {
  if (a.point_count() != b.point_count() || a.line_count() != b.line_count())
    return std::nullopt;
  std::vector<std::vector<int>> by_degree(
      static_cast<size_t>(b.line_count() + 1));
  for (int q = 0; q < b.point_count(); ++q)
    by_degree[b.lines_through(q).size()].push_back(q);
  auto candidates = [&](int p) {
    return by_degree[a.lines_through(p).size()];
  };

  // The constrained-automorphism search only needs candidate sets and the
  // incidence of the *target* space; reuse it by searching over a and
  // checking images in b.
  struct Search {
    const fgeom::PartialLinearSpace& a;
    const fgeom::PartialLinearSpace& b;
    std::vector<int> image;
    std::vector<char> used;

    bool consistent(int p, int c) const {
      for (int q = 0; q < a.point_count(); ++q) {
        const int iq = image[static_cast<size_t>(q)];
        if (iq < 0 || q == p) continue;
        if (a.adjacent(p, q) != b.adjacent(c, iq)) return false;
        const int l = a.line_on(p, q);
        if (l >= 0) {
          const int r = fgeom::third_point(a, l, p, q);
          const int ir = image[static_cast<size_t>(r)];
          if (ir >= 0) {
            const int lm = b.line_on(c, iq);
            if (lm < 0 || !b.line_contains(lm, ir)) return false;
          }
        }
      }
      return true;
    }

    bool run(int depth, const std::function<std::vector<int>(int)>& cand) {
      if (depth == a.point_count()) return true;
      for (int c : cand(depth)) {
        if (used[static_cast<size_t>(c)]) continue;
        if (!consistent(depth, c)) continue;
        image[static_cast<size_t>(depth)] = c;
        used[static_cast<size_t>(c)] = 1;
        if (run(depth + 1, cand)) return true;
        image[static_cast<size_t>(depth)] = -1;
        used[static_cast<size_t>(c)] = 0;
      }
      return false;
    }
  };
  Search search{a, b,
                std::vector<int>(static_cast<size_t>(a.point_count()), -1),
                std::vector<char>(static_cast<size_t>(b.point_count()), 0)};
  if (!search.run(0, candidates)) return std::nullopt;

  // Confirm lines land on lines (adjacency pruning makes this near-certain,
  // but slim spaces admit triangles in principle).
  for (const auto& ln : a.lines()) {
    const int lm = b.line_on(search.image[static_cast<size_t>(ln[0])],
                             search.image[static_cast<size_t>(ln[1])]);
    if (lm < 0 ||
        !b.line_contains(lm, search.image[static_cast<size_t>(ln[2])]))
      return std::nullopt;
  }
  return search.image;
}

fgeom::PartialLinearSpace build_product_L3(
    const fgeom::PartialLinearSpace& q) {
  const int n = q.point_count();
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(3 * n));
  for (int copy = 0; copy < 3; ++copy) {
    const std::string suffix = copy == 0 ? "" : (copy == 1 ? "~" : "~~");
    for (int p = 0; p < n; ++p) labels.push_back(q.label(p) + suffix);
  }
  std::vector<std::array<int, 3>> lines;
  for (int copy = 0; copy < 3; ++copy)
    for (const auto& ln : q.lines())
      lines.push_back(
          {ln[0] + copy * n, ln[1] + copy * n, ln[2] + copy * n});
  for (int p = 0; p < n; ++p) lines.push_back({p, p + n, p + 2 * n});
  return fgeom::PartialLinearSpace(q.name() + " x L3", std::move(labels),
                                   std::move(lines));
}

}  // namespace hexarep::gmodels
