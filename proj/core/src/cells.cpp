#include "jring/cells.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <json.hpp>

#include "jring/errors.hpp"

namespace jring {

namespace {

// Iterative Tarjan; components relabelled by minimal member afterwards.
std::vector<int> strong_components(const std::vector<std::vector<Elt>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<std::uint8_t> on_stack(n, 0);
  std::vector<int> stack;
  int next_index = 0, ncomp = 0;

  struct Frame {
    int v;
    size_t child;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.child < adj[f.v].size()) {
        int w = static_cast<int>(adj[f.v][f.child++]);
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == index[v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = ncomp;
            if (w == v) break;
          }
          ++ncomp;
        }
      }
    }
  }

  // Deterministic ids: order components by minimal member.
  std::vector<Elt> min_member(ncomp, static_cast<Elt>(n));
  for (int v = 0; v < n; ++v)
    min_member[comp[v]] = std::min(min_member[comp[v]], static_cast<Elt>(v));
  std::vector<int> order(ncomp);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return min_member[a] < min_member[b]; });
  std::vector<int> relabel(ncomp);
  for (int i = 0; i < ncomp; ++i) relabel[order[i]] = i;
  for (int v = 0; v < n; ++v) comp[v] = relabel[comp[v]];
  return comp;
}

}  // namespace

int CellPartition::index_in_two(Elt u) const {
  const auto& m = two[two_of[u]].members;
  return static_cast<int>(std::lower_bound(m.begin(), m.end(), u) - m.begin());
}

std::vector<Elt> CellPartition::block(const CoxeterGroup& W, int g, int gp) const {
  std::vector<Elt> out;
  for (Elt x : left[g].members)
    if (left_of[W.inverse(x)] == gp) out.push_back(x);
  return out;
}

CellPartition cell_partition(HTable& h) {
  const CoxeterGroup& W = h.group();
  const Elt n = W.size();

  std::vector<std::vector<Elt>> ladj(n), tadj(n);
  for (Elt w = 0; w < n; ++w) {
    ladj[w].push_back(w);
    tadj[w].push_back(w);
    for (int s = 0; s < W.rank(); ++s) {
      Elt gs = W.left_mul(s, 0);
      for (const auto& [z, hp] : h.c_product(gs, w)) {
        (void)hp;
        ladj[w].push_back(z);
        tadj[w].push_back(z);
      }
      // right preorder edge: z <=_R w iff z^{-1} <=_L w^{-1}
      for (const auto& [zi, hp] : h.c_product(gs, W.inverse(w))) {
        (void)hp;
        tadj[w].push_back(W.inverse(zi));
      }
    }
  }

  CellPartition cells;
  cells.left_of = strong_components(ladj);
  cells.two_of = strong_components(tadj);

  int nleft = 1 + *std::max_element(cells.left_of.begin(), cells.left_of.end());
  int ntwo = 1 + *std::max_element(cells.two_of.begin(), cells.two_of.end());
  cells.left.resize(nleft);
  cells.two.resize(ntwo);
  for (Elt w = 0; w < n; ++w) {
    cells.left[cells.left_of[w]].members.push_back(w);
    cells.two[cells.two_of[w]].members.push_back(w);
  }
  for (int g = 0; g < nleft; ++g) {
    auto& lc = cells.left[g];
    lc.two_sided = cells.two_of[lc.members.front()];
    for (Elt w : lc.members)
      if (cells.two_of[w] != lc.two_sided)
        throw structural_error("left cell split across two-sided cells");
    cells.two[lc.two_sided].left_cells.push_back(g);
    lc.s_gamma = W.right_descents(lc.members.front());
    for (Elt w : lc.members)
      if (W.right_descents(w) != lc.s_gamma)
        throw structural_error("right-descent set not constant on a left cell");
  }

  for (Elt w = 0; w < n; ++w)
    if (cells.two_of[W.inverse(w)] != cells.two_of[w])
      throw structural_error("two-sided cell not stable under inversion");

  for (const auto& tc : cells.two)
    for (int g : tc.left_cells)
      for (int gp : tc.left_cells)
        if (cells.block(W, g, gp).empty())
          throw structural_error("empty block Gamma cap Gamma'^{-1} inside a two-sided cell");

  return cells;
}

void annotate_a(CellPartition& cells, HTable& h) {
  h.fill_all();
  const CoxeterGroup& W = h.group();
  for (auto& tc : cells.two) {
    tc.a = h.a_value(tc.members.front());
    tc.a_prime = h.a_value(W.mul(tc.members.front(), W.w0()));
    for (Elt x : tc.members) {
      if (h.a_value(x) != tc.a)
        throw structural_error("a-function not constant on a two-sided cell");
      if (h.a_value(W.mul(x, W.w0())) != tc.a_prime)
        throw structural_error("a(x w0) not constant on a two-sided cell");
    }
  }
}

void set_deltas(CellPartition& cells, const std::vector<Elt>& distinguished) {
  for (auto& lc : cells.left) {
    int count = 0;
    for (Elt d : distinguished) {
      if (std::binary_search(lc.members.begin(), lc.members.end(), d)) {
        lc.delta = d;
        lc.has_delta = true;
        ++count;
      }
    }
    if (count != 1)
      throw structural_error("left cell does not contain exactly one distinguished involution");
  }
}

std::string dump_cells_json(const CoxeterGroup& W, const CellPartition& cells) {
  nlohmann::ordered_json doc;
  doc["type"] = W.datum().label;
  auto two = nlohmann::ordered_json::array();
  for (size_t c = 0; c < cells.two.size(); ++c) {
    const auto& tc = cells.two[c];
    nlohmann::ordered_json jc;
    jc["id"] = c;
    jc["size"] = tc.members.size();
    jc["a"] = tc.a;
    jc["a_prime"] = tc.a_prime;
    jc["left_cells"] = tc.left_cells;
    two.push_back(std::move(jc));
  }
  doc["two_sided_cells"] = std::move(two);
  auto left = nlohmann::ordered_json::array();
  for (size_t g = 0; g < cells.left.size(); ++g) {
    const auto& lc = cells.left[g];
    nlohmann::ordered_json jc;
    jc["id"] = g;
    jc["two_sided"] = lc.two_sided;
    std::vector<int> sg;
    for (int s = 0; s < W.rank(); ++s)
      if (lc.s_gamma >> s & 1u) sg.push_back(s);
    jc["s_gamma"] = sg;
    if (lc.has_delta) {
      jc["delta"] = lc.delta;
      jc["delta_word"] = W.word(lc.delta);
    }
    auto members = nlohmann::ordered_json::array();
    for (Elt w : lc.members) {
      nlohmann::ordered_json m;
      m["id"] = w;
      m["word"] = W.word(w);
      members.push_back(std::move(m));
    }
    jc["members"] = std::move(members);
    left.push_back(std::move(jc));
  }
  doc["left_cells"] = std::move(left);
  return doc.dump(2);
}

}  // namespace jring
