#include "pebbling/proof.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "pebbling/flow.hpp"

namespace pebbling {

static void check_instance(const Graph& g, const Distribution& d) {
  if (static_cast<int>(d.size()) != g.order())
    throw std::invalid_argument("distribution size does not match graph");
  for (int c : d)
    if (c < 0) throw std::invalid_argument("negative pebble count");
}

ZubPartition zub_partition(const Graph& g, const Distribution& d) {
  check_instance(g, d);
  ZubPartition p;
  for (int v = 0; v < g.order(); ++v) {
    if (d[v] == 0)
      p.zeroes.push_back(v);
    else if (d[v] == 1)
      p.units.push_back(v);
    else {
      p.bigs.push_back(v);
      p.big_total += d[v];
    }
  }
  p.m = static_cast<int>(p.bigs.size());
  p.size_is_order = size_of(d) == g.order();
  if (p.size_is_order) {
    long long z = static_cast<long long>(p.zeroes.size());
    // big_total = |B|+|Z| and |Z| = m(omega-1); the second is the first
    // rearranged, both checked explicitly
    p.identities_hold =
        p.big_total == p.m + z && z == p.big_total - p.m;
  }
  return p;
}

BlowupGraph blowup_graph(const Graph& g, const Distribution& d, int v) {
  check_instance(g, d);
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
  BlowupGraph h;
  h.base_vertex = v;
  h.class_nodes.assign(g.order(), {});
  auto add_node = [&](int base, bool is_class) {
    h.node_base.push_back(base);
    h.node_is_class.push_back(is_class ? 1 : 0);
    return static_cast<int>(h.node_base.size()) - 1;
  };
  std::vector<int> base_node(g.order(), -1);
  h.root = add_node(v, false);
  base_node[v] = h.root;
  for (int u = 0; u < g.order(); ++u)
    if (u != v && d[u] == 1) base_node[u] = add_node(u, false);
  for (int b = 0; b < g.order(); ++b)
    if (b != v && d[b] > 1)
      for (int i = 0; i < d[b] / 2; ++i)
        h.class_nodes[b].push_back(add_node(b, true));
  h.apex = add_node(-1, false);
  h.adj.assign(h.node_count(), {});
  auto link = [&](int a, int b) {
    h.adj[a].push_back(b);
    h.adj[b].push_back(a);
  };
  // in-scope base vertices are v and the units; bigs became classes
  for (int a = 0; a < g.order(); ++a) {
    for (int b : g.neighbors(a)) {
      if (b <= a) continue;
      bool a_base = base_node[a] >= 0, b_base = base_node[b] >= 0;
      bool a_class = !h.class_nodes[a].empty(),
           b_class = !h.class_nodes[b].empty();
      if (a_base && b_base) link(base_node[a], base_node[b]);
      if (a_base && b_class)
        for (int nd : h.class_nodes[b]) link(base_node[a], nd);
      if (a_class && b_base)
        for (int nd : h.class_nodes[a]) link(nd, base_node[b]);
      if (a_class && b_class)
        for (int n1 : h.class_nodes[a])
          for (int n2 : h.class_nodes[b]) link(n1, n2);
    }
  }
  for (int nd = 0; nd < h.node_count(); ++nd)
    if (h.node_is_class[nd]) link(nd, h.apex);
  for (auto& a : h.adj) std::sort(a.begin(), a.end());
  return h;
}

namespace {

// nodes of H'_v reachable from start while avoiding `blocked`
std::vector<char> reach_avoiding(const BlowupGraph& h, int start,
                                 const std::vector<char>& blocked) {
  std::vector<char> seen(h.node_count(), 0);
  if (blocked[start]) return seen;
  std::queue<int> q;
  seen[start] = 1;
  q.push(start);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : h.adj[u])
      if (!seen[w] && !blocked[w]) {
        seen[w] = 1;
        q.push(w);
      }
  }
  return seen;
}

}  // namespace

SeparatorReport min_separator(const Graph& g, const Distribution& d, int v) {
  SeparatorReport rep;
  rep.v = v;
  rep.blowup = blowup_graph(g, d, v);
  const BlowupGraph& h = rep.blowup;
  std::vector<char> none(h.node_count(), 0);
  rep.path_family =
      flow::vertex_disjoint_paths(h.adj, h.root, h.apex, none, &rep.cut_nodes);

  // Claim 2 statement 3: a partially cut class can be exchanged for the
  // whole class without growing the cut (identical neighborhoods within
  // A_b). Flow-derived minimum cuts already satisfy this; the repair path
  // keeps the report honest if one ever does not.
  std::set<int> cut(rep.cut_nodes.begin(), rep.cut_nodes.end());
  rep.stmt3_holds = true;
  for (int b = 0; b < g.order(); ++b) {
    const auto& cls = h.class_nodes[b];
    if (cls.empty()) continue;
    size_t hit = 0;
    for (int nd : cls) hit += cut.count(nd);
    if (hit > 0 && hit < cls.size()) {
      rep.stmt3_holds = false;
      rep.repaired = true;
      for (int nd : cls) cut.insert(nd);
    }
  }
  if (rep.repaired) {
    std::vector<char> blocked(h.node_count(), 0);
    for (int nd : cut) blocked[nd] = 1;
    auto seen = reach_avoiding(h, h.root, blocked);
    if (seen[h.apex] || cut.size() != rep.path_family.size())
      throw std::logic_error("separator repair produced a non-minimum cut");
    rep.cut_nodes.assign(cut.begin(), cut.end());
  }

  // statement 1: with S'_v removed, v reaches no surviving class node
  std::vector<char> blocked(h.node_count(), 0);
  for (int nd : rep.cut_nodes) blocked[nd] = 1;
  auto seen = reach_avoiding(h, h.root, blocked);
  rep.stmt1_holds = true;
  for (int nd = 0; nd < h.node_count(); ++nd)
    if (h.node_is_class[nd] && !blocked[nd] && seen[nd])
      rep.stmt1_holds = false;

  // S_v = units in the cut plus bigs whose whole class is cut
  std::set<int> base;
  for (int nd : rep.cut_nodes)
    if (!h.node_is_class[nd]) base.insert(h.node_base[nd]);
  for (int b = 0; b < g.order(); ++b) {
    const auto& cls = h.class_nodes[b];
    if (cls.empty()) continue;
    bool all = std::all_of(cls.begin(), cls.end(),
                           [&](int nd) { return cut.count(nd) > 0; });
    if (all) base.insert(b);
  }
  rep.base_separator.assign(base.begin(), base.end());
  return rep;
}

int claim1_bound(const Graph& g, const Distribution& d, int v) {
  check_instance(g, d);
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
  const int n = g.order();
  const int big = 4 * n + 4;
  // source, split units, one node per big endpoint, sink
  std::vector<int> u_in(n, -1), b_node(n, -1);
  int next = 1;  // 0 = source (v)
  for (int u = 0; u < n; ++u)
    if (u != v && d[u] == 1) {
      u_in[u] = next;
      next += 2;
    }
  for (int b = 0; b < n; ++b)
    if (b != v && d[b] > 1) b_node[b] = next++;
  int sink = next++;
  flow::Network net(next);
  for (int u = 0; u < n; ++u)
    if (u_in[u] >= 0) net.add_edge(u_in[u], u_in[u] + 1, 1);
  for (int b = 0; b < n; ++b)
    if (b_node[b] >= 0) net.add_edge(b_node[b], sink, d[b] / 2);
  for (auto [a, b] : g.edges()) {
    for (int k = 0; k < 2; ++k) {
      int from = k == 0 ? a : b, to = k == 0 ? b : a;
      int src = from == v ? 0 : (u_in[from] >= 0 ? u_in[from] + 1 : -1);
      if (src < 0) continue;
      if (to != v && u_in[to] >= 0) net.add_edge(src, u_in[to], big);
      if (b_node[to] >= 0) net.add_edge(src, b_node[to], big);
    }
  }
  return net.max_flow(0, sink);
}

B0Selection select_b0(const Graph& g, const Distribution& d) {
  check_instance(g, d);
  auto part = zub_partition(g, d);
  if (part.m == 0) throw std::invalid_argument("no bigs to select from");
  auto diam = diameter(g);
  if (!diam) throw std::invalid_argument("graph disconnected");
  const long long bound = 1LL << (*diam + 2);

  B0Selection sel;
  std::set<int> remaining(part.bigs.begin(), part.bigs.end());
  while (!remaining.empty()) {
    int b = *remaining.begin();
    auto sep = min_separator(g, d, b);
    long long step = d[b];
    for (int x : sep.base_separator) step += d[x];
    sel.order.push_back(b);
    sel.separators.push_back(sep.base_separator);
    sel.step_pebbles.push_back(step);
    remaining.erase(b);
    for (int x : sep.base_separator) remaining.erase(x);
  }
  sel.steps_within_bound = std::all_of(
      sel.step_pebbles.begin(), sel.step_pebbles.end(),
      [&](long long s) { return s < bound; });
  long long q = static_cast<long long>(sel.order.size());
  sel.claim4_holds = q * bound > part.big_total;
  sel.pairwise_ok = true;
  for (size_t i = 0; i < sel.order.size(); ++i)
    for (size_t j = i + 1; j < sel.order.size(); ++j)
      if (std::find(sel.separators[i].begin(), sel.separators[i].end(),
                    sel.order[j]) != sel.separators[i].end())
        sel.pairwise_ok = false;
  return sel;
}

TerminalFamilies terminal_families(const Graph& g, const Distribution& d,
                                   const B0Selection& b0, int z0) {
  check_instance(g, d);
  if (z0 < 0 || z0 >= g.order()) throw std::out_of_range("z0 out of range");
  if (d[z0] != 0) throw std::invalid_argument("z0 must be a zero of phi");
  TerminalFamilies fam;
  std::set<int> w;
  for (const auto& sep : b0.separators) w.insert(sep.begin(), sep.end());
  fam.w_set.assign(w.begin(), w.end());
  auto in_wz = [&](int x) { return w.count(x) > 0 || d[x] == 0; };

  fam.root_edge_premise_ok = true;
  for (size_t i = 0; i < b0.order.size(); ++i) {
    int b = b0.order[i];
    if (g.has_edge(b, z0)) fam.root_edge_premise_ok = false;
    std::set<int> sep(b0.separators[i].begin(), b0.separators[i].end());
    int kept = 0, discarded = 0;
    for (const auto& path : max_disjoint_paths(g, b, z0, {})) {
      bool meets_sep = std::any_of(path.vertices.begin(), path.vertices.end(),
                                   [&](int x) { return sep.count(x) > 0; });
      if (meets_sep) {
        ++discarded;
        continue;
      }
      RootedPath q;
      q.root = b;
      for (int x : path.vertices) {
        q.vertices.push_back(x);
        if (x != b && in_wz(x)) {
          q.terminal = x;
          break;
        }
      }
      // z0 itself is a zero, so a terminal always exists
      ++kept;
      fam.family.push_back(std::move(q));
    }
    fam.kept_per_root.push_back(kept);
    fam.discarded_per_root.push_back(discarded);
  }
  return fam;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "HOLDS";
    case Verdict::Fails:
      return "FAILS";
    default:
      return "PREMISE-NOT-MET";
  }
}

const ClaimResult* AuditReport::find(const std::string& name) const {
  for (const auto& c : claims)
    if (c.claim == name) return &c;
  return nullptr;
}

bool AuditReport::all_met_claims_hold() const {
  for (const auto& c : claims)
    if (c.premise_met && c.verdict == Verdict::Fails) return false;
  return true;
}

AuditReport audit_counterexample(const Graph& g, const Distribution& d,
                                 int z0) {
  check_instance(g, d);
  if (z0 < 0 || z0 >= g.order()) throw std::out_of_range("z0 out of range");
  if (d[z0] != 0) throw std::invalid_argument("z0 must be a zero of phi");

  AuditReport rep;
  if (!is_connected(g)) {
    rep.premise_note = "premise fails: graph disconnected";
    return rep;
  }
  if (can_pebble(g, d, z0).reachable) {
    rep.premise_note = "premise fails: z0 reachable";
    return rep;
  }
  rep.premise_ok = true;
  rep.premise_note = "z0 unreachable";
  const int n = g.order();
  const int D = diameter(g).value();
  rep.diameter_used = D;
  const long long two_d = 1LL << D;
  auto part = zub_partition(g, d);

  {  // preliminary observations behind the proof
    ClaimResult c;
    c.claim = "preliminaries";
    c.premise_met = true;
    bool no_big_neighbor = true;
    for (int b : part.bigs)
      if (g.has_edge(b, z0)) no_big_neighbor = false;
    // no z0-to-B path with interior inside B u U
    std::vector<char> blocked(n, 0);
    for (int z : part.zeroes)
      if (z != z0) blocked[z] = 1;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    seen[z0] = 1;
    q.push(z0);
    bool escape = false;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (seen[w] || blocked[w]) continue;
        if (d[w] > 1) escape = true;
        seen[w] = 1;
        q.push(w);
      }
    }
    bool phi_bounded = true;
    int phi_witness = -1;
    for (int v = 0; v < n; ++v)
      if (d[v] >= two_d) {
        phi_bounded = false;
        phi_witness = v;
      }
    c.quantities = {{"no_big_neighbor", no_big_neighbor},
                    {"no_escape_path", !escape},
                    {"phi_below_2d", phi_bounded}};
    c.verdict = (no_big_neighbor && !escape && phi_bounded) ? Verdict::Holds
                                                            : Verdict::Fails;
    if (!phi_bounded) c.witness = "phi(" + std::to_string(phi_witness) + ")";
    rep.claims.push_back(std::move(c));
  }

  {  // partition identities, meaningful only at size |V|
    ClaimResult c;
    c.claim = "partition";
    c.premise_met = part.size_is_order;
    c.quantities = {{"m", part.m},
                    {"big_total", part.big_total},
                    {"zeroes", part.zeroes.size()},
                    {"units", part.units.size()},
                    {"size", size_of(d)}};
    c.verdict = !part.size_is_order ? Verdict::PremiseNotMet
                : part.identities_hold ? Verdict::Holds
                                       : Verdict::Fails;
    rep.claims.push_back(std::move(c));
  }

  std::vector<SeparatorReport> seps;
  seps.reserve(n);
  for (int v = 0; v < n; ++v) seps.push_back(min_separator(g, d, v));

  {  // Claim 1
    ClaimResult c;
    c.claim = "claim1";
    c.premise_met = true;
    c.verdict = Verdict::Holds;
    nlohmann::json bounds = nlohmann::json::array();
    for (int v = 0; v < n; ++v) {
      int e = claim1_bound(g, d, v);
      bounds.push_back(e);
      if (e >= two_d) {
        c.verdict = Verdict::Fails;
        if (c.witness.empty()) c.witness = "v=" + std::to_string(v);
      }
    }
    c.quantities = {{"bounds", bounds}, {"limit", two_d}};
    rep.claims.push_back(std::move(c));
  }

  {  // Claim 2
    ClaimResult c;
    c.claim = "claim2";
    c.premise_met = true;
    c.verdict = Verdict::Holds;
    nlohmann::json sizes = nlohmann::json::array();
    for (int v = 0; v < n; ++v) {
      const auto& s = seps[v];
      sizes.push_back(s.cut_nodes.size());
      bool ok = static_cast<long long>(s.cut_nodes.size()) < two_d &&
                s.stmt1_holds && s.stmt3_holds &&
                s.cut_nodes.size() == s.path_family.size();
      if (!ok) {
        c.verdict = Verdict::Fails;
        if (c.witness.empty()) c.witness = "v=" + std::to_string(v);
      }
    }
    c.quantities = {{"separator_sizes", sizes}, {"limit", two_d}};
    rep.claims.push_back(std::move(c));
  }

  {  // Claim 3
    ClaimResult c;
    c.claim = "claim3";
    c.premise_met = true;
    c.verdict = Verdict::Holds;
    nlohmann::json sums = nlohmann::json::array();
    for (int v = 0; v < n; ++v) {
      long long sum = d[v];
      for (int x : seps[v].base_separator) sum += d[x];
      sums.push_back(sum);
      if (sum >= 4 * two_d) {
        c.verdict = Verdict::Fails;
        if (c.witness.empty()) c.witness = "v=" + std::to_string(v);
      }
    }
    c.quantities = {{"sums", sums}, {"limit", 4 * two_d}};
    rep.claims.push_back(std::move(c));
  }

  B0Selection b0;
  bool have_b0 = part.m > 0;
  if (have_b0) b0 = select_b0(g, d);

  {  // Claim 4
    ClaimResult c;
    c.claim = "claim4";
    c.premise_met = have_b0 && b0.steps_within_bound;
    if (!have_b0) {
      c.verdict = Verdict::PremiseNotMet;
      c.quantities = {{"note", "B empty"}};
    } else {
      c.quantities = {{"q", b0.order.size()},
                      {"m", part.m},
                      {"big_total", part.big_total},
                      {"step_pebbles", b0.step_pebbles},
                      {"steps_within_bound", b0.steps_within_bound},
                      {"pairwise_ok", b0.pairwise_ok}};
      if (!c.premise_met)
        c.verdict = Verdict::PremiseNotMet;
      else
        c.verdict = (b0.claim4_holds && b0.pairwise_ok) ? Verdict::Holds
                                                        : Verdict::Fails;
    }
    rep.claims.push_back(std::move(c));
  }

  TerminalFamilies fam;
  if (have_b0) fam = terminal_families(g, d, b0, z0);

  {  // Claim 5
    ClaimResult c;
    c.claim = "claim5";
    c.premise_met = have_b0 && fam.root_edge_premise_ok;
    if (!c.premise_met) {
      c.verdict = Verdict::PremiseNotMet;
    } else {
      c.verdict = Verdict::Holds;
      std::map<int, std::vector<const RootedPath*>> by_terminal;
      for (const auto& p : fam.family) by_terminal[p.terminal].push_back(&p);
      for (const auto& [term, paths] : by_terminal) {
        for (size_t i = 0; i < paths.size(); ++i) {
          for (size_t j = i + 1; j < paths.size(); ++j) {
            if (paths[i]->root == paths[j]->root) continue;
            std::set<int> a(paths[i]->vertices.begin(),
                            paths[i]->vertices.end());
            int shared = 0;
            for (int x : paths[j]->vertices)
              if (a.count(x) && x != term) ++shared;
            if (shared > 0) {
              c.verdict = Verdict::Fails;
              if (c.witness.empty())
                c.witness = "terminal=" + std::to_string(term) +
                            " roots=" + std::to_string(paths[i]->root) + "," +
                            std::to_string(paths[j]->root);
            }
          }
        }
      }
      c.quantities = {{"family_size", fam.family.size()},
                      {"kept_per_root", fam.kept_per_root},
                      {"discarded_per_root", fam.discarded_per_root}};
    }
    rep.claims.push_back(std::move(c));
  }

  {  // final counting ratio; needs very high connectivity to bite
    ClaimResult c;
    c.claim = "final_count";
    long long needed = 1LL << std::min(2 * D + 3, 60);
    int kappa = n >= 2 ? vertex_connectivity(g) : 0;
    c.premise_met = have_b0 && n >= 2 && kappa >= needed;
    std::set<int> wz(fam.w_set.begin(), fam.w_set.end());
    for (int z : part.zeroes) wz.insert(z);
    long long f_size = static_cast<long long>(fam.family.size());
    long long wz_size = static_cast<long long>(wz.size());
    c.quantities = {{"family_size", f_size},
                    {"wz_size", wz_size},
                    {"threshold", two_d - 1},
                    {"connectivity", kappa},
                    {"required_connectivity", needed}};
    if (!c.premise_met)
      c.verdict = Verdict::PremiseNotMet;
    else
      c.verdict = (f_size > (two_d - 1) * wz_size) ? Verdict::Holds
                                                   : Verdict::Fails;
    rep.claims.push_back(std::move(c));
  }

  return rep;
}

std::string audit_to_json(const AuditReport& r) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : r.claims) {
    claims.push_back({{"claim", c.claim},
                      {"premise_met", c.premise_met},
                      {"verdict", verdict_name(c.verdict)},
                      {"quantities", c.quantities},
                      {"witness", c.witness}});
  }
  nlohmann::json j = {{"premise_ok", r.premise_ok},
                      {"premise_note", r.premise_note},
                      {"diameter", r.diameter_used},
                      {"claims", claims}};
  return j.dump(2);
}

}  // namespace pebbling
