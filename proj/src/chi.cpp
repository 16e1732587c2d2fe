#include "stringgrass/chi.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_map>
#include <utility>

namespace stringgrass {

namespace {

using Key = std::vector<long>;
using Table = std::map<Key, BigInt>;

// The DP state spaces below are keyed by partial dimension vectors. Packing a
// vector into one word keeps the hot maps cheap; the vector codec is the
// fallback when the capped box does not fit in 64 bits.
struct PackedCodec {
  using K = std::uint64_t;
  std::vector<int> shift;
  std::vector<std::uint64_t> cap, mask;

  static bool fits(const std::vector<long>& caps) {
    int bits = 0;
    for (long c : caps) {
      int b = 1;
      while ((1L << b) <= c) ++b;
      bits += b;
    }
    return bits <= 64;
  }

  explicit PackedCodec(const std::vector<long>& caps) {
    int bits = 0;
    for (long c : caps) {
      int b = 1;
      while ((1L << b) <= c) ++b;
      shift.push_back(bits);
      cap.push_back(static_cast<std::uint64_t>(c));
      mask.push_back((std::uint64_t(1) << b) - 1);
      bits += b;
    }
  }

  K zero() const { return 0; }
  bool can_bump(K k, int qi) const { return ((k >> shift[qi]) & mask[qi]) < cap[qi]; }
  K bump(K k, int qi) const { return k + (std::uint64_t(1) << shift[qi]); }
  Key unpack(K k) const {
    Key out(shift.size());
    for (std::size_t i = 0; i < shift.size(); ++i) {
      out[i] = static_cast<long>((k >> shift[i]) & mask[i]);
    }
    return out;
  }
  struct Hash {
    std::size_t operator()(std::uint64_t v) const {
      v ^= v >> 33;
      v *= 0x9e3779b97f4a7c15ULL;
      v ^= v >> 29;
      return static_cast<std::size_t>(v);
    }
  };
};

struct VectorCodec {
  using K = Key;
  std::vector<long> cap;

  explicit VectorCodec(std::vector<long> caps) : cap(std::move(caps)) {}

  K zero() const { return Key(cap.size(), 0); }
  bool can_bump(const K& k, int qi) const { return k[qi] < cap[qi]; }
  K bump(K k, int qi) const {
    ++k[qi];
    return k;
  }
  Key unpack(const K& k) const { return k; }
  struct Hash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = 1469598103934665603ull;
      for (long v : k) {
        h ^= static_cast<std::size_t>(v);
        h *= 1099511628211ull;
      }
      return h;
    }
  };
};

// Linear scan along one chain component. State per partial dimension vector:
// counts split by whether the previous vertex was taken; an arrow between
// consecutive vertices kills exactly one of the four combinations.
template <class Codec>
Table chain_dp(const CoefficientQuiver& cq, const std::vector<int>& order, const Codec& codec) {
  using K = typename Codec::K;
  std::unordered_map<K, std::array<BigInt, 2>, typename Codec::Hash> cur;

  {
    auto& cell = cur[codec.zero()];
    cell[0] = 1;
    int q0 = cq.q_index_of(order[0]);
    if (codec.can_bump(codec.zero(), q0)) cur[codec.bump(codec.zero(), q0)][1] += 1;
  }

  for (std::size_t i = 1; i < order.size(); ++i) {
    bool forward = false, found = false;
    for (int k : cq.out(order[i - 1])) {
      if (cq.arrows()[k].head == order[i]) {
        forward = true;
        found = true;
        break;
      }
    }
    if (!found) {
      for (int k : cq.in(order[i - 1])) {
        if (cq.arrows()[k].tail == order[i]) {
          found = true;
          break;
        }
      }
    }
    if (!found) fail(Errc::InvalidParameter, "order is not a chain");

    const int qv = cq.q_index_of(order[i]);
    std::unordered_map<K, std::array<BigInt, 2>, typename Codec::Hash> next;
    next.reserve(cur.size() * 2);
    for (auto& [key, cnt] : cur) {
      // forward arrow prev -> cur: taking prev forces taking cur;
      // backward arrow cur -> prev: taking cur forces having taken prev.
      BigInt take_out = forward ? cnt[0] : cnt[0] + cnt[1];
      BigInt take_in = forward ? cnt[0] + cnt[1] : cnt[1];
      if (take_out != 0) next[key][0] += take_out;
      if (take_in != 0 && codec.can_bump(key, qv)) next[codec.bump(key, qv)][1] += take_in;
    }
    cur.swap(next);
  }

  Table out;
  for (auto& [key, cnt] : cur) {
    BigInt s = cnt[0] + cnt[1];
    if (s != 0) out[codec.unpack(key)] += s;
  }
  return out;
}

// Power-set scan of one component, closure checked against local out-masks.
Table exhaustive_component(const CoefficientQuiver& cq, const std::vector<int>& comp,
                           const std::vector<long>& cap) {
  const int s = static_cast<int>(comp.size());
  if (s > 24) fail(Errc::TooLarge, "exhaustive tier is limited to 24 vertices per component");
  std::vector<int> local(cq.total_vertices(), -1);
  for (int i = 0; i < s; ++i) local[comp[i]] = i;
  std::vector<std::uint32_t> out_mask(s, 0);
  std::vector<int> qidx(s);
  for (int i = 0; i < s; ++i) {
    qidx[i] = cq.q_index_of(comp[i]);
    for (int k : cq.out(comp[i])) out_mask[i] |= std::uint32_t(1) << local[cq.arrows()[k].head];
  }
  const int nq = cq.q_vertex_count();
  Table table;
  Key key(nq, 0);
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << s); ++mask) {
    bool closed = true;
    for (int i = 0; i < s && closed; ++i) {
      if ((mask >> i) & 1u) closed = (out_mask[i] & ~mask) == 0;
    }
    if (!closed) continue;
    std::fill(key.begin(), key.end(), 0);
    bool within = true;
    for (int i = 0; i < s && within; ++i) {
      if ((mask >> i) & 1u) within = ++key[qidx[i]] <= cap[qidx[i]];
    }
    if (within) table[key] += 1;
  }
  return table;
}

// Strongly connected components of the subgraph induced on comp, iterative
// Tarjan. Emitted sinks-first (reverse topological order of the condensation).
struct Condensation {
  std::vector<std::vector<int>> members;        // cq vertex positions per node
  std::vector<std::vector<int>> succs;          // node -> earlier nodes it points at
};

Condensation condense(const CoefficientQuiver& cq, const std::vector<int>& comp) {
  std::vector<int> local(cq.total_vertices(), -1);
  for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
  const int n = static_cast<int>(comp.size());

  std::vector<int> index(n, -1), low(n, 0), scc_of(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  Condensation cond;
  int next_index = 0;

  struct Frame {
    int v;
    std::size_t edge;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& outs = cq.out(comp[f.v]);
      if (f.edge < outs.size()) {
        int w = local[cq.arrows()[outs[f.edge]].head];
        ++f.edge;
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        int v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        if (low[v] == index[v]) {
          std::vector<int> scc;
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            scc_of[w] = static_cast<int>(cond.members.size());
            scc.push_back(comp[w]);
            if (w == v) break;
          }
          std::sort(scc.begin(), scc.end());
          cond.members.push_back(std::move(scc));
        }
      }
    }
  }

  cond.succs.resize(cond.members.size());
  for (int v = 0; v < n; ++v) {
    for (int k : cq.out(comp[v])) {
      int w = local[cq.arrows()[k].head];
      if (scc_of[v] != scc_of[w]) cond.succs[scc_of[v]].push_back(scc_of[w]);
    }
  }
  for (auto& s : cond.succs) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return cond;
}

// General tier: decide condensation nodes successors-first; a node may be
// taken only when all of its successors are taken. Watched nodes (decided,
// still referenced by an undecided predecessor) form the frontier; its
// membership pattern plus the partial dimension vector is the DP state.
template <class Codec>
Table frontier_dp(const CoefficientQuiver& cq, const std::vector<int>& comp, const Codec& codec) {
  Condensation cond = condense(cq, comp);
  const int m = static_cast<int>(cond.members.size());

  std::vector<int> watch_until(m, -1);
  for (int u = 0; u < m; ++u) {
    for (int y : cond.succs[u]) watch_until[y] = std::max(watch_until[y], u);
  }

  using K = typename Codec::K;
  struct StateHash {
    typename Codec::Hash inner;
    std::size_t operator()(const std::pair<std::uint64_t, K>& s) const {
      return inner(s.second) * 1315423911ull ^ std::hash<std::uint64_t>()(s.first);
    }
  };
  std::unordered_map<std::pair<std::uint64_t, K>, BigInt, StateHash> cur;
  cur[{0, codec.zero()}] = 1;

  std::vector<int> frontier;  // node ids, bit position = index in this list
  for (int u = 0; u < m; ++u) {
    std::vector<int> bit_of(m, -1);
    for (std::size_t i = 0; i < frontier.size(); ++i) bit_of[frontier[i]] = static_cast<int>(i);

    std::uint64_t need = 0;
    for (int y : cond.succs[u]) need |= std::uint64_t(1) << bit_of[y];

    // Can the whole SCC be taken under the cap at all?
    std::vector<int> weight_qi;
    for (int v : cond.members[u]) weight_qi.push_back(cq.q_index_of(v));

    std::unordered_map<std::pair<std::uint64_t, K>, BigInt, StateHash> next;
    next.reserve(cur.size() * 2);

    // Frontier after this step: u joins if some later node points at it;
    // nodes watched only up to u drop out.
    std::vector<int> new_frontier;
    for (int y : frontier) {
      if (watch_until[y] > u) new_frontier.push_back(y);
    }
    if (watch_until[u] > u) new_frontier.push_back(u);
    if (new_frontier.size() > 64) {
      fail(Errc::TooLarge, "frontier exceeds 64 condensation nodes");
    }
    std::vector<int> new_bit(m, -1);
    for (std::size_t i = 0; i < new_frontier.size(); ++i) new_bit[new_frontier[i]] = static_cast<int>(i);

    auto project = [&](std::uint64_t mask, bool took_u) {
      std::uint64_t out = 0;
      for (int y : new_frontier) {
        bool bit = y == u ? took_u : ((mask >> bit_of[y]) & 1u) != 0;
        if (bit) out |= std::uint64_t(1) << new_bit[y];
      }
      return out;
    };

    for (auto& [state, count] : cur) {
      const auto& [mask, key] = state;
      next[{project(mask, false), key}] += count;
      if ((mask & need) == need) {
        K bumped = key;
        bool ok = true;
        for (int qi : weight_qi) {
          if (!codec.can_bump(bumped, qi)) {
            ok = false;
            break;
          }
          bumped = codec.bump(bumped, qi);
        }
        if (ok) next[{project(mask, true), std::move(bumped)}] += count;
      }
    }
    cur.swap(next);
    frontier.swap(new_frontier);
  }

  Table out;
  for (auto& [state, count] : cur) out[codec.unpack(state.second)] += count;
  return out;
}

template <class Codec>
Table component_table(const CoefficientQuiver& cq, const std::vector<int>& comp,
                      const std::vector<long>& cap, CountAlgo algo, const Codec& codec) {
  switch (algo) {
    case CountAlgo::ChainDP: {
      auto order = chain_order(cq, comp);
      if (!order) fail(Errc::InvalidParameter, "component is not a chain");
      return chain_dp(cq, *order, codec);
    }
    case CountAlgo::Exhaustive:
      return exhaustive_component(cq, comp, cap);
    case CountAlgo::Frontier:
      return frontier_dp(cq, comp, codec);
    case CountAlgo::Auto:
      break;
  }
  if (auto order = chain_order(cq, comp)) return chain_dp(cq, *order, codec);
  if (comp.size() <= 24) return exhaustive_component(cq, comp, cap);
  return frontier_dp(cq, comp, codec);
}

Table convolve(const Table& a, const Table& b, const std::vector<long>& cap) {
  Table out;
  Key key(cap.size(), 0);
  for (const auto& [ka, va] : a) {
    for (const auto& [kb, vb] : b) {
      bool within = true;
      for (std::size_t i = 0; i < cap.size(); ++i) {
        key[i] = ka[i] + kb[i];
        if (key[i] > cap[i]) {
          within = false;
          break;
        }
      }
      if (within) out[key] += va * vb;
    }
  }
  return out;
}

Table full_table(const CoefficientQuiver& cq, const std::vector<long>& cap, CountAlgo algo) {
  Table acc;
  acc[Key(cap.size(), 0)] = 1;
  for (const auto& comp : undirected_components(cq)) {
    Table part;
    if (PackedCodec::fits(cap)) {
      part = component_table(cq, comp, cap, algo, PackedCodec(cap));
    } else {
      part = component_table(cq, comp, cap, algo, VectorCodec(cap));
    }
    acc = convolve(acc, part, cap);
  }
  return acc;
}

void check_e_shape(const CoefficientQuiver& cq, const DimensionVector& e) {
  if (e.size() != cq.q_vertex_count()) {
    fail(Errc::DimensionMismatch, "e has " + std::to_string(e.size()) + " entries for " +
                                      std::to_string(cq.q_vertex_count()) + " vertices");
  }
}

}  // namespace

BigInt ChiTable::at(const DimensionVector& e) const {
  auto it = counts.find(e);
  return it == counts.end() ? BigInt(0) : it->second;
}

BigInt ChiTable::total() const {
  BigInt s = 0;
  for (const auto& [e, c] : counts) s += c;
  return s;
}

BigInt count_successor_closed(const CoefficientQuiver& cq, const DimensionVector& e,
                              CountAlgo algo) {
  check_e_shape(cq, e);
  for (int i = 0; i < e.size(); ++i) {
    if (e[i] > cq.q_dims()[i]) return 0;
  }
  Table acc = full_table(cq, e.as_longs(), algo);
  auto it = acc.find(e.as_longs());
  return it == acc.end() ? BigInt(0) : it->second;
}

ChiTable chi_table(const CoefficientQuiver& cq, CountAlgo algo) {
  ChiTable out;
  out.total_dims = DimensionVector(cq.q_dims());
  for (auto& [key, count] : full_table(cq, cq.q_dims(), algo)) {
    out.counts.emplace(DimensionVector(key), std::move(count));
  }
  return out;
}

ChiTable chi_table(const Representation& rep, CountAlgo algo) {
  if (!check_monomial(rep)) {
    fail(Errc::NotMonomial, "an arrow matrix has two nonzero entries in a row or column");
  }
  return chi_table(build_coefficient_quiver(rep), algo);
}

BigInt count_oracle(const CoefficientQuiver& cq, const DimensionVector& e) {
  check_e_shape(cq, e);
  ChiTable table = oracle_table(cq);
  return table.at(e);
}

ChiTable oracle_table(const CoefficientQuiver& cq) {
  const int n = cq.total_vertices();
  if (n > 24) fail(Errc::TooLarge, "oracle is limited to 24 basis vectors");
  std::vector<std::uint32_t> out_mask(n, 0);
  std::vector<int> qidx(n);
  for (int v = 0; v < n; ++v) {
    qidx[v] = cq.q_index_of(v);
    for (int k : cq.out(v)) out_mask[v] |= std::uint32_t(1) << cq.arrows()[k].head;
  }
  ChiTable out;
  out.total_dims = DimensionVector(cq.q_dims());
  Key key(cq.q_vertex_count(), 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    bool closed = true;
    for (int v = 0; v < n && closed; ++v) {
      if ((mask >> v) & 1u) closed = (out_mask[v] & ~mask) == 0;
    }
    if (!closed) continue;
    std::fill(key.begin(), key.end(), 0);
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1u) ++key[qidx[v]];
    }
    out.counts[DimensionVector(key)] += 1;
  }
  return out;
}

BigInt closed_subset_total_chains(const CoefficientQuiver& cq) {
  BigInt total = 1;
  for (const auto& comp : undirected_components(cq)) {
    auto order = chain_order(cq, comp);
    if (!order) fail(Errc::InvalidParameter, "component is not a chain");
    BigInt out = 1, in = 1;
    for (std::size_t i = 1; i < order->size(); ++i) {
      bool forward = false;
      for (int k : cq.out((*order)[i - 1])) {
        if (cq.arrows()[k].head == (*order)[i]) {
          forward = true;
          break;
        }
      }
      BigInt new_out = forward ? out : out + in;
      BigInt new_in = forward ? out + in : in;
      out = std::move(new_out);
      in = std::move(new_in);
    }
    total *= out + in;
  }
  return total;
}

BigInt count_coordinate_subreps(const Representation& rep, const DimensionVector& e) {
  if (e.size() != rep.quiver.vertex_count()) {
    fail(Errc::DimensionMismatch, "e has " + std::to_string(e.size()) + " entries for " +
                                      std::to_string(rep.quiver.vertex_count()) + " vertices");
  }
  for (int i = 0; i < e.size(); ++i) {
    if (e[i] > rep.dims[i]) return 0;
  }
  ChiTable t = coordinate_table(rep);
  return t.at(e);
}

ChiTable coordinate_table(const Representation& rep) {
  if (!check_monomial(rep)) {
    fail(Errc::NotMonomial, "an arrow matrix has two nonzero entries in a row or column");
  }
  require_valid(rep);
  const int nv = rep.quiver.vertex_count();
  for (int i = 0; i < nv; ++i) {
    if (rep.dims[i] > 60) fail(Errc::TooLarge, "direct subset scan is limited to 60 basis vectors per vertex");
  }

  // img[arrow][c] = target basis hit by source basis c+1, or 0 for the kernel.
  struct ArrowMap {
    int src, dst;
    std::vector<int> img;
  };
  std::vector<ArrowMap> maps;
  for (const auto& [label, entries] : rep.matrices) {
    const Arrow& a = rep.quiver.arrow(label);
    ArrowMap m{rep.quiver.vertex_index(a.source), rep.quiver.vertex_index(a.target),
               std::vector<int>(static_cast<std::size_t>(rep.dims[rep.quiver.vertex_index(a.source)]), 0)};
    for (const MatrixEntry& entry : entries) m.img[entry.col - 1] = entry.row;
    maps.push_back(std::move(m));
  }
  // Arrows checked as soon as both endpoints are decided.
  std::vector<std::vector<int>> check_at(nv);
  for (int k = 0; k < static_cast<int>(maps.size()); ++k) {
    check_at[std::max(maps[k].src, maps[k].dst)].push_back(k);
  }

  std::vector<std::uint64_t> chosen(nv, 0);
  ChiTable out;
  out.total_dims = rep.dims;
  Key key(nv, 0);

  auto admissible = [&](int k) {
    const ArrowMap& m = maps[k];
    std::uint64_t src = chosen[m.src], dst = chosen[m.dst];
    for (int c = 0; src >> c; ++c) {
      if ((src >> c) & 1u) {
        int r = m.img[c];
        if (r != 0 && !((dst >> (r - 1)) & 1u)) return false;
      }
    }
    return true;
  };

  auto recurse = [&](auto&& self, int v) -> void {
    if (v == nv) {
      for (int i = 0; i < nv; ++i) key[i] = static_cast<long>(__builtin_popcountll(chosen[i]));
      out.counts[DimensionVector(key)] += 1;
      return;
    }
    const std::uint64_t limit = std::uint64_t(1) << rep.dims[v];  // dims <= 60 checked above
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      chosen[v] = mask;
      bool ok = true;
      for (int k : check_at[v]) {
        if (!admissible(k)) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, v + 1);
    }
    chosen[v] = 0;
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace stringgrass
