#include "coxcat/coxeter.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <regex>

#include "coxcat/errors.hpp"

namespace coxcat {

namespace {

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void link(IntMatrix& m, int i, int j, int v) { m[i][j] = m[j][i] = v; }

CoxeterDatum make_family(char family, int n, int k) {
  IntMatrix m;
  std::vector<bool> shorts;
  switch (family) {
    case 'A':
      m = identity_matrix(n);
      for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1, 3);
      break;
    case 'B':
    case 'C':
      if (n < 2) throw ParseError("B/C need rank >= 2");
      m = identity_matrix(n);
      for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1, i + 2 == n ? 4 : 3);
      if (family == 'C') {
        shorts.assign(n, true);
        shorts[n - 1] = false;
      }
      break;
    case 'D':
      if (n < 4) throw ParseError("D needs rank >= 4");
      m = identity_matrix(n);
      for (int i = 0; i + 2 < n; ++i) link(m, i, i + 1, 3);
      link(m, n - 3, n - 1, 3);
      break;
    case 'E':
      if (n < 6 || n > 8) throw ParseError("E needs rank 6, 7 or 8");
      m = identity_matrix(n);
      link(m, 0, 2, 3);
      link(m, 1, 3, 3);
      for (int i = 2; i + 1 < n; ++i) link(m, i, i + 1, 3);
      break;
    case 'F':
      if (n != 4) throw ParseError("F needs rank 4");
      m = identity_matrix(4);
      link(m, 0, 1, 3);
      link(m, 1, 2, 4);
      link(m, 2, 3, 3);
      break;
    case 'G':
      if (n != 2) throw ParseError("G needs rank 2");
      m = identity_matrix(2);
      link(m, 0, 1, 6);
      break;
    case 'H':
      if (n != 3 && n != 4) throw ParseError("H needs rank 3 or 4");
      m = identity_matrix(n);
      link(m, 0, 1, 5);
      for (int i = 1; i + 1 < n; ++i) link(m, i, i + 1, 3);
      break;
    case 'I':
      if (k < 2) throw ParseError("I2(k) needs k >= 2");
      m = identity_matrix(2);
      link(m, 0, 1, k);
      break;
    default:
      throw ParseError(std::string("unknown family ") + family);
  }
  CoxeterDatum d = CoxeterDatum::from_matrix(m);
  d.short_root = shorts;
  if (family == 'I')
    d.type_label = "I2(" + std::to_string(k) + ")";
  else
    d.type_label = std::string(1, family) + std::to_string(n);
  return d;
}

}  // namespace

CoxeterDatum CoxeterDatum::parse(const std::string& label) {
  static const std::regex token(R"(\s*(?:I2\((\d+)\)|([A-H])(\d+))\s*)");
  CoxeterDatum result;
  bool first = true;
  std::size_t pos = 0;
  while (pos <= label.size()) {
    std::size_t next = label.find('x', pos);
    std::string piece = label.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    std::smatch mt;
    if (!std::regex_match(piece, mt, token)) throw ParseError("cannot parse type '" + label + "'");
    CoxeterDatum part;
    if (mt[1].matched) {
      part = make_family('I', 2, std::stoi(mt[1].str()));
    } else {
      char fam = mt[2].str()[0];
      int n = std::stoi(mt[3].str());
      if (fam == 'A' && n == 0) {
        part = CoxeterDatum::from_matrix({});
        part.type_label = "A0";
      } else {
        if (n == 0) throw ParseError("rank 0 only for A0");
        part = make_family(fam, n, 0);
      }
    }
    result = first ? part : product(result, part);
    first = false;
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  result.validate();
  return result;
}

CoxeterDatum CoxeterDatum::from_matrix(const IntMatrix& m, std::string label) {
  CoxeterDatum d;
  d.rank = static_cast<int>(m.size());
  d.matrix = m;
  d.color.assign(d.rank, -1);
  for (int s = 0; s < d.rank; ++s) {
    if (d.color[s] != -1) continue;
    d.color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < d.rank; ++v) {
        if (v == u || m[u][v] < 3) continue;
        if (d.color[v] == -1) {
          d.color[v] = 1 - d.color[u];
          q.push(v);
        } else if (d.color[v] == d.color[u]) {
          throw InvalidBipartition("Coxeter graph has an odd cycle");
        }
      }
    }
  }
  d.type_label = label.empty() ? classify(m) : std::move(label);
  return d;
}

void CoxeterDatum::validate() const {
  if (static_cast<int>(matrix.size()) != rank) throw ParseError("matrix size mismatch");
  for (int i = 0; i < rank; ++i) {
    if (static_cast<int>(matrix[i].size()) != rank) throw ParseError("matrix not square");
    if (matrix[i][i] != 1) throw ParseError("diagonal entries must be 1");
    for (int j = 0; j < rank; ++j) {
      if (matrix[i][j] != matrix[j][i]) throw ParseError("matrix not symmetric");
      if (i != j && matrix[i][j] < 2) throw ParseError("off-diagonal entries must be >= 2");
    }
  }
  if (static_cast<int>(color.size()) != rank) throw InvalidBipartition("bipartition size mismatch");
  for (int i = 0; i < rank; ++i) {
    if (color[i] != 0 && color[i] != 1) throw InvalidBipartition("colors must be 0 or 1");
    for (int j = i + 1; j < rank; ++j)
      if (matrix[i][j] >= 3 && color[i] == color[j])
        throw InvalidBipartition("adjacent simple reflections share a color");
  }
}

std::vector<std::vector<int>> CoxeterDatum::components() const {
  std::vector<int> comp(rank, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < rank; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < members.size(); ++k)
      for (int v = 0; v < rank; ++v)
        if (comp[v] == -1 && matrix[members[k]][v] >= 3) {
          comp[v] = comp[s];
          members.push_back(v);
        }
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  return out;
}

bool CoxeterDatum::crystallographic() const {
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      int v = matrix[i][j];
      if (i != j && v != 2 && v != 3 && v != 4 && v != 6) return false;
    }
  return true;
}

std::vector<int> CoxeterDatum::bullet() const {
  std::vector<int> r;
  for (int i = 0; i < rank; ++i)
    if (color[i] == 0) r.push_back(i);
  return r;
}

std::vector<int> CoxeterDatum::circle() const {
  std::vector<int> r;
  for (int i = 0; i < rank; ++i)
    if (color[i] == 1) r.push_back(i);
  return r;
}

CoxeterDatum product(const CoxeterDatum& a, const CoxeterDatum& b) {
  if (a.rank == 0) return b;
  if (b.rank == 0) return a;
  const int n = a.rank + b.rank;
  IntMatrix m = identity_matrix(n);
  for (int i = 0; i < a.rank; ++i)
    for (int j = 0; j < a.rank; ++j) m[i][j] = a.matrix[i][j];
  for (int i = 0; i < b.rank; ++i)
    for (int j = 0; j < b.rank; ++j) m[a.rank + i][a.rank + j] = b.matrix[i][j];
  CoxeterDatum d;
  d.rank = n;
  d.matrix = m;
  d.type_label = a.type_label + "x" + b.type_label;
  d.color = a.color;
  d.color.insert(d.color.end(), b.color.begin(), b.color.end());
  if (!a.short_root.empty() || !b.short_root.empty()) {
    auto sa = a.short_root.empty() ? std::vector<bool>(a.rank, false) : a.short_root;
    auto sb = b.short_root.empty() ? std::vector<bool>(b.rank, false) : b.short_root;
    sa.insert(sa.end(), sb.begin(), sb.end());
    d.short_root = sa;
  }
  return d;
}

namespace {

std::string classify_component(const IntMatrix& m, const std::vector<int>& comp) {
  const int n = static_cast<int>(comp.size());
  if (n == 1) return "A1";
  if (n == 2) {
    int k = m[comp[0]][comp[1]];
    if (k == 3) return "A2";
    if (k == 4) return "B2";
    if (k == 6) return "G2";
    return "I2(" + std::to_string(k) + ")";
  }
  std::vector<std::vector<int>> adj(n);
  int heavy = 0, heavy_label = 3, branch = -1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && m[comp[i]][comp[j]] >= 3) {
        adj[i].push_back(j);
        if (i < j && m[comp[i]][comp[j]] > 3) {
          ++heavy;
          heavy_label = m[comp[i]][comp[j]];
        }
      }
  for (int i = 0; i < n; ++i)
    if (adj[i].size() == 3) branch = i;
  if (branch >= 0) {
    std::vector<int> arms;
    for (int start : adj[branch]) {
      int len = 1, prev = branch, cur = start;
      while (adj[cur].size() == 2) {
        int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
    return "E" + std::to_string(n);
  }
  if (heavy == 0) return "A" + std::to_string(n);
  // Path with one heavy edge: find whether it sits at an end.
  int end = 0;
  while (adj[end].size() != 1) ++end;
  std::vector<int> path{end};
  while (static_cast<int>(path.size()) < n) {
    int cur = path.back();
    for (int v : adj[cur])
      if (path.size() < 2 || v != path[path.size() - 2]) {
        path.push_back(v);
        break;
      }
  }
  bool at_end = m[comp[path[0]]][comp[path[1]]] > 3 || m[comp[path[n - 2]]][comp[path[n - 1]]] > 3;
  if (heavy_label == 5) return "H" + std::to_string(n);
  if (heavy_label == 4 && at_end) return "B" + std::to_string(n);
  if (heavy_label == 4) return "F4";
  return "?" + std::to_string(n);
}

}  // namespace

std::string classify(const IntMatrix& m) {
  if (m.empty()) return "A0";
  CoxeterDatum tmp;
  tmp.rank = static_cast<int>(m.size());
  tmp.matrix = m;
  std::string out;
  for (const auto& comp : tmp.components()) {
    if (!out.empty()) out += "x";
    out += classify_component(m, comp);
  }
  return out;
}

IntMatrix integer_cartan(const CoxeterDatum& d) {
  if (!d.crystallographic()) throw NonCrystallographic(d.type_label);
  const int n = d.rank;
  std::vector<bool> shorts = d.short_root;
  if (shorts.empty()) {
    // Long roots on the side of each heavy edge holding its smaller index.
    shorts.assign(n, false);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (d.matrix[i][j] != 4 && d.matrix[i][j] != 6) continue;
        std::vector<bool> seen(n, false);
        std::vector<int> stack{j};
        seen[j] = true;
        seen[i] = true;
        while (!stack.empty()) {
          int u = stack.back();
          stack.pop_back();
          shorts[u] = true;
          for (int v = 0; v < n; ++v)
            if (!seen[v] && d.matrix[u][v] >= 3) {
              seen[v] = true;
              stack.push_back(v);
            }
        }
      }
  }
  IntMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int mij = d.matrix[i][j];
      if (mij == 2) continue;
      if (mij == 3) {
        a[i][j] = -1;
        continue;
      }
      int heavy = mij == 4 ? -2 : -3;
      // a_ij = <alpha_i^vee, alpha_j>: short i paired with long j gives the heavy entry.
      a[i][j] = (shorts[i] && !shorts[j]) ? heavy : -1;
    }
  }
  return a;
}

}  // namespace coxcat
