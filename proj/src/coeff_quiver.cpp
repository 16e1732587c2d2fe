#include "stringgrass/coeff_quiver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace stringgrass {

std::string BasisVertex::name() const {
  return std::to_string(q_vertex) + "." + std::to_string(index);
}

CoefficientQuiver::CoefficientQuiver(std::vector<int> q_vertex_ids, std::vector<long> q_dims,
                                     std::vector<CoeffArrow> arrows)
    : q_vertex_ids_(std::move(q_vertex_ids)),
      q_dims_(std::move(q_dims)),
      arrows_(std::move(arrows)) {
  if (q_vertex_ids_.size() != q_dims_.size()) {
    fail(Errc::DimensionMismatch, "vertex ids and dims disagree");
  }
  offset_.resize(q_dims_.size());
  for (std::size_t i = 0; i < q_dims_.size(); ++i) {
    if (q_dims_[i] < 0) fail(Errc::InvalidParameter, "negative dimension");
    offset_[i] = total_;
    total_ += static_cast<int>(q_dims_[i]);
  }
  out_.resize(total_);
  in_.resize(total_);
  std::set<std::string> label_set;
  for (int k = 0; k < static_cast<int>(arrows_.size()); ++k) {
    const CoeffArrow& a = arrows_[k];
    if (a.tail < 0 || a.tail >= total_ || a.head < 0 || a.head >= total_) {
      fail(Errc::IndexOutOfRange, "arrow endpoint outside the vertex range");
    }
    out_[a.tail].push_back(k);
    in_[a.head].push_back(k);
    label_set.insert(a.label);
  }
  labels_.assign(label_set.begin(), label_set.end());
}

BasisVertex CoefficientQuiver::basis(int pos) const {
  if (pos < 0 || pos >= total_) fail(Errc::IndexOutOfRange, "vertex position out of range");
  int qi = static_cast<int>(q_dims_.size()) - 1;
  while (offset_[qi] > pos) --qi;
  return BasisVertex{q_vertex_ids_[qi], pos - offset_[qi] + 1};
}

int CoefficientQuiver::position(const BasisVertex& b) const {
  for (std::size_t qi = 0; qi < q_vertex_ids_.size(); ++qi) {
    if (q_vertex_ids_[qi] == b.q_vertex) {
      if (b.index < 1 || b.index > q_dims_[qi]) {
        fail(Errc::IndexOutOfRange, "basis index out of range for " + b.name());
      }
      return offset_[qi] + b.index - 1;
    }
  }
  fail(Errc::IndexOutOfRange, "unknown quiver vertex " + std::to_string(b.q_vertex));
}

int CoefficientQuiver::q_index_of(int pos) const {
  if (pos < 0 || pos >= total_) fail(Errc::IndexOutOfRange, "vertex position out of range");
  int qi = static_cast<int>(q_dims_.size()) - 1;
  while (offset_[qi] > pos) --qi;
  return qi;
}

CoefficientQuiver build_coefficient_quiver(const Representation& rep) {
  require_valid(rep);
  std::vector<long> dims = rep.dims.as_longs();
  std::vector<int> offset(dims.size());
  int total = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    offset[i] = total;
    total += static_cast<int>(dims[i]);
  }
  std::vector<CoeffArrow> arrows;
  for (const auto& [label, entries] : rep.matrices) {
    const Arrow& a = rep.quiver.arrow(label);
    int src = rep.quiver.vertex_index(a.source);
    int dst = rep.quiver.vertex_index(a.target);
    // entry (row, col): basis col of the source feeds basis row of the target
    std::vector<MatrixEntry> sorted = entries;
    std::sort(sorted.begin(), sorted.end(), [](const MatrixEntry& x, const MatrixEntry& y) {
      return std::pair(x.col, x.row) < std::pair(y.col, y.row);
    });
    for (const MatrixEntry& entry : sorted) {
      arrows.push_back({label, offset[src] + entry.col - 1, offset[dst] + entry.row - 1});
    }
  }
  return CoefficientQuiver(rep.quiver.vertices(), std::move(dims), std::move(arrows));
}

bool check_monomial(const Representation& rep) {
  require_valid(rep);
  for (const auto& [label, entries] : rep.matrices) {
    std::set<int> rows, cols;
    for (const MatrixEntry& entry : entries) {
      if (!rows.insert(entry.row).second) return false;
      if (!cols.insert(entry.col).second) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> undirected_components(const CoefficientQuiver& cq) {
  const int n = cq.total_vertices();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> result;
  for (int start = 0; start < n; ++start) {
    if (comp[start] != -1) continue;
    std::vector<int> members, stack{start};
    comp[start] = static_cast<int>(result.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      auto visit = [&](int w) {
        if (comp[w] == -1) {
          comp[w] = comp[start];
          stack.push_back(w);
        }
      };
      for (int k : cq.out(v)) visit(cq.arrows()[k].head);
      for (int k : cq.in(v)) visit(cq.arrows()[k].tail);
    }
    std::sort(members.begin(), members.end());
    result.push_back(std::move(members));
  }
  return result;
}

std::optional<std::vector<int>> chain_order(const CoefficientQuiver& cq,
                                            const std::vector<int>& component) {
  // Simple path test on the undirected multigraph: every vertex meets at most
  // two arrow endpoints and the component is a tree (#arrows = #vertices - 1).
  std::map<int, std::vector<int>> nbrs;  // vertex -> neighbor per incident arrow
  long arrow_count = 0;
  for (int v : component) nbrs[v];
  for (int v : component) {
    for (int k : cq.out(v)) {
      const CoeffArrow& a = cq.arrows()[k];
      ++arrow_count;
      nbrs[a.tail].push_back(a.head);
      nbrs[a.head].push_back(a.tail);
    }
  }
  if (arrow_count != static_cast<long>(component.size()) - 1) return std::nullopt;
  for (const auto& [v, ns] : nbrs) {
    if (ns.size() > 2) return std::nullopt;
  }
  // Walk from the smallest endpoint. component is sorted, so the first vertex
  // of degree <= 1 is the lexicographically smallest (q-vertex, index) end.
  int start = -1;
  for (int v : component) {
    if (nbrs[v].size() <= 1) {
      start = v;
      break;
    }
  }
  if (start == -1) return std::nullopt;  // all degree 2: a cycle
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (order.size() < component.size()) {
    int next = -1;
    for (int w : nbrs[cur]) {
      if (w != prev) {
        next = w;
        break;
      }
    }
    if (next == -1) return std::nullopt;  // path exhausted early: disconnected?
    // A parallel pair tail<->head shows up as two equal neighbors; the arrow
    // count test above already rejected that, so `next` is unambiguous.
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

bool orientation_feasible(const CoefficientQuiver& cq,
                          const std::vector<std::vector<int>>& chains,
                          std::vector<int>* chain_flip) {
  // One parity variable per chain (flip its direction?) and per label (which
  // way do its arrows point?); each arrow ties the two: flip ^ dir = local
  // orientation. Feasible iff the parity constraints have no odd cycle.
  const int n = cq.total_vertices();
  std::vector<int> chain_of(n, -1), pos(n, -1);
  for (int c = 0; c < static_cast<int>(chains.size()); ++c) {
    for (int i = 0; i < static_cast<int>(chains[c].size()); ++i) {
      chain_of[chains[c][i]] = c;
      pos[chains[c][i]] = i;
    }
  }
  std::map<std::string, int> label_node;
  const int chain_nodes = static_cast<int>(chains.size());
  int nodes = chain_nodes;
  for (const std::string& l : cq.labels()) label_node[l] = nodes++;

  std::vector<int> parent(nodes), parity(nodes, 0);
  for (int i = 0; i < nodes; ++i) parent[i] = i;
  auto find = [&](int x) {
    int root = x;
    while (parent[root] != root) root = parent[root];
    int p = 0;
    for (int v = x; v != root;) {
      p ^= parity[v];
      v = parent[v];
    }
    // path compression with accumulated parity
    for (int v = x; v != root;) {
      int next = parent[v];
      int vp = parity[v];
      parent[v] = root;
      parity[v] = p;
      p ^= vp;
      v = next;
    }
    return root;
  };
  auto parity_to_root = [&](int x) {
    find(x);
    return parent[x] == x ? 0 : parity[x];
  };
  auto unite = [&](int a, int b, int rel) {
    int ra = find(a), rb = find(b);
    int pa = parity_to_root(a), pb = parity_to_root(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent[ra] = rb;
    parity[ra] = pa ^ pb ^ rel;
    return true;
  };

  for (const CoeffArrow& a : cq.arrows()) {
    int c = chain_of[a.tail];
    if (c == -1 || chain_of[a.head] != c) return false;  // not a chain cover
    int local = pos[a.head] == pos[a.tail] + 1 ? 0 : 1;
    if (!unite(c, label_node[a.label], local)) return false;
  }
  if (chain_flip) {
    chain_flip->assign(chain_nodes, 0);
    for (int c = 0; c < chain_nodes; ++c) (*chain_flip)[c] = parity_to_root(c);
    // Parities are relative to each constraint component's root; that root is
    // an arbitrary gauge, any consistent choice serves.
  }
  return true;
}

StringClassification classify_string(const Representation& rep) {
  StringClassification cls;
  cls.is_monomial = check_monomial(rep);
  CoefficientQuiver cq = build_coefficient_quiver(rep);

  std::vector<std::vector<int>> chains;
  bool all_chains = true;
  for (const auto& comp : undirected_components(cq)) {
    auto order = chain_order(cq, comp);
    if (!order) {
      all_chains = false;
      break;
    }
    chains.push_back(std::move(*order));
  }
  cls.is_string = cls.is_monomial && all_chains;
  if (!cls.is_string) return cls;

  std::sort(chains.begin(), chains.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  cls.components = std::move(chains);
  cls.is_orientable = orientation_feasible(cq, cls.components);
  return cls;
}

std::string to_dot(const CoefficientQuiver& cq) {
  std::ostringstream out;
  out << "digraph coefficient_quiver {\n";
  for (int v = 0; v < cq.total_vertices(); ++v) {
    out << "  \"" << cq.basis(v).name() << "\";\n";
  }
  for (const CoeffArrow& a : cq.arrows()) {
    out << "  \"" << cq.basis(a.tail).name() << "\" -> \"" << cq.basis(a.head).name()
        << "\" [label=\"" << a.label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace stringgrass
