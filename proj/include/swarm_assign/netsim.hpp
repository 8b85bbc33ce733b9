#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "swarm_assign/errors.hpp"

namespace swarm_assign {

/// Node indices 0..n-1 with sorted neighbor lists; symmetric, irreflexive.
using Adjacency = std::vector<std::vector<int>>;

struct Message {
  int src{0};
  int dst{0};
  int round{0};  // the communication round this message travels in, >= 1
  std::string payload;
};

struct ComponentStats {
  int rounds{0};
  long long messages{0};
  long long bytes{0};
};

struct RoundLog {
  int rounds{0};
  long long messages{0};
  long long bytes{0};
  std::vector<ComponentStats> per_component;
  std::vector<int> component_of;  // node -> component id
};

inline std::vector<int> connected_components(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    comp[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const int u : adj[static_cast<std::size_t>(v)]) {
        if (comp[static_cast<std::size_t>(u)] < 0) {
          comp[static_cast<std::size_t>(u)] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  return comp;
}

/// Per-node transition function of a synchronous protocol. activate() is
/// called once at round 0 with an empty inbox (initial sends), then once per
/// round while the node is live. Return false to halt. Messages sent during
/// round r travel in round r+1 and are delivered before the recipients'
/// round-(r+1) activation.
class Protocol {
 public:
  struct Send {
    int dst{0};
    std::string payload;
  };

  virtual ~Protocol() = default;
  virtual int round_bound(int n_nodes) const = 0;
  virtual bool activate(int node, int round, const std::vector<Message>& inbox,
                        std::vector<Send>& out) = 0;
};

/// Lock-step execution of a protocol over the communication graph. The
/// engine is sequential and evaluates nodes in ascending index order within a
/// round; inboxes are sorted by sender, so outputs cannot depend on
/// scheduling. RoundLog.rounds is the highest round with any activity
/// (a live node or an in-flight message).
inline RoundLog run_protocol(const Adjacency& adj, Protocol& proto) {
  const int n = static_cast<int>(adj.size());
  RoundLog log;
  log.component_of = connected_components(adj);
  int n_comp = 0;
  for (const int c : log.component_of) n_comp = std::max(n_comp, c + 1);
  log.per_component.assign(static_cast<std::size_t>(n_comp), {});

  std::vector<char> halted(static_cast<std::size_t>(n), 0);
  std::vector<Message> inflight;

  auto note_round = [&](int comp, int round) {
    log.rounds = std::max(log.rounds, round);
    ComponentStats& cs = log.per_component[static_cast<std::size_t>(comp)];
    cs.rounds = std::max(cs.rounds, round);
  };

  auto activate_node = [&](int node, int round, const std::vector<Message>& inbox) {
    std::vector<Protocol::Send> out;
    const bool live = proto.activate(node, round, inbox, out);
    const int comp = log.component_of[static_cast<std::size_t>(node)];
    for (Protocol::Send& s : out) {
      const std::vector<int>& nbrs = adj[static_cast<std::size_t>(node)];
      if (!std::binary_search(nbrs.begin(), nbrs.end(), s.dst))
        throw ProtocolError("protocol violation: node " + std::to_string(node) +
                            " sent to non-neighbor " + std::to_string(s.dst));
      log.messages += 1;
      log.bytes += static_cast<long long>(s.payload.size());
      ComponentStats& cs = log.per_component[static_cast<std::size_t>(comp)];
      cs.messages += 1;
      cs.bytes += static_cast<long long>(s.payload.size());
      inflight.push_back(Message{node, s.dst, round + 1, std::move(s.payload)});
    }
    if (!live) halted[static_cast<std::size_t>(node)] = 1;
  };

  // Round 0: initial activation, empty inboxes.
  {
    const std::vector<Message> empty;
    for (int v = 0; v < n; ++v) activate_node(v, 0, empty);
  }

  const int bound = proto.round_bound(n);
  std::vector<std::vector<Message>> inbox(static_cast<std::size_t>(n));
  for (int r = 1;; ++r) {
    const bool all_halted =
        std::all_of(halted.begin(), halted.end(), [](char h) { return h != 0; });
    if (all_halted && inflight.empty()) break;
    if (r > bound)
      throw ProtocolError("protocol divergence: exceeded declared round bound " +
                          std::to_string(bound));

    for (auto& box : inbox) box.clear();
    std::vector<Message> arriving = std::move(inflight);
    inflight.clear();
    std::stable_sort(arriving.begin(), arriving.end(),
                     [](const Message& a, const Message& b) {
                       return std::tie(a.dst, a.src) < std::tie(b.dst, b.src);
                     });
    for (Message& msg : arriving) {
      note_round(log.component_of[static_cast<std::size_t>(msg.src)], msg.round);
      inbox[static_cast<std::size_t>(msg.dst)].push_back(std::move(msg));
    }
    for (int v = 0; v < n; ++v) {
      if (halted[static_cast<std::size_t>(v)]) continue;
      note_round(log.component_of[static_cast<std::size_t>(v)], r);
      activate_node(v, r, inbox[static_cast<std::size_t>(v)]);
    }
  }
  return log;
}

// --- wire helpers for protocol payloads (little-endian, fixed width) -------

namespace wire {

inline void put_i32(std::string& s, std::int32_t v) {
  char buf[4];
  std::memcpy(buf, &v, 4);
  s.append(buf, 4);
}

inline void put_f64(std::string& s, double v) {
  char buf[8];
  std::memcpy(buf, &v, 8);
  s.append(buf, 8);
}

inline void put_bytes(std::string& s, const std::string& v) {
  put_i32(s, static_cast<std::int32_t>(v.size()));
  s.append(v);
}

class Reader {
 public:
  explicit Reader(const std::string& s) : s_(s) {}

  bool done() const { return pos_ >= s_.size(); }

  std::int32_t i32() {
    require(4);
    std::int32_t v;
    std::memcpy(&v, s_.data() + pos_, 4);
    pos_ += 4;
    return v;
  }

  double f64() {
    require(8);
    double v;
    std::memcpy(&v, s_.data() + pos_, 8);
    pos_ += 8;
    return v;
  }

  std::string bytes() {
    const std::int32_t len = i32();
    if (len < 0) throw ProtocolError("malformed payload: negative length");
    require(static_cast<std::size_t>(len));
    std::string v = s_.substr(pos_, static_cast<std::size_t>(len));
    pos_ += static_cast<std::size_t>(len);
    return v;
  }

 private:
  void require(std::size_t k) const {
    if (pos_ + k > s_.size()) throw ProtocolError("malformed payload: truncated record");
  }
  const std::string& s_;
  std::size_t pos_{0};
};

}  // namespace wire

// --- k-hop neighborhood gathering ------------------------------------------

/// What one node has learned after gathering: distances and inputs for every
/// node within k hops, plus the induced edges among them.
struct NodeView {
  std::map<int, int> distance;          // node -> hops (self = 0)
  std::map<int, std::string> inputs;    // node -> its input
  std::vector<std::pair<int, int>> edges;  // induced, a < b
};

namespace detail {

class GatherProtocol : public Protocol {
 public:
  GatherProtocol(const Adjacency& adj, const std::vector<std::string>& inputs, int k)
      : adj_(adj), inputs_(inputs), k_(k), known_(adj.size()) {}

  int round_bound(int) const override { return k_ + 1; }

  bool activate(int node, int round, const std::vector<Message>& inbox,
                std::vector<Send>& out) override {
    auto& known = known_[static_cast<std::size_t>(node)];
    std::vector<int> fresh;
    if (round == 0) {
      known.emplace(node, Entry{0, inputs_[static_cast<std::size_t>(node)],
                                adj_[static_cast<std::size_t>(node)]});
      fresh.push_back(node);
    } else {
      for (const Message& msg : inbox) {
        wire::Reader r(msg.payload);
        const int count = r.i32();
        for (int i = 0; i < count; ++i) {
          Entry e;
          const int id = r.i32();
          e.input = r.bytes();
          const int deg = r.i32();
          e.neighbors.resize(static_cast<std::size_t>(deg));
          for (int b = 0; b < deg; ++b) e.neighbors[static_cast<std::size_t>(b)] = r.i32();
          e.dist = round;
          if (known.emplace(id, std::move(e)).second) fresh.push_back(id);
        }
      }
    }
    if (round < k_ && !fresh.empty()) {
      std::sort(fresh.begin(), fresh.end());
      std::string payload;
      wire::put_i32(payload, static_cast<std::int32_t>(fresh.size()));
      for (const int id : fresh) {
        const Entry& e = known.at(id);
        wire::put_i32(payload, id);
        wire::put_bytes(payload, e.input);
        wire::put_i32(payload, static_cast<std::int32_t>(e.neighbors.size()));
        for (const int nb : e.neighbors) wire::put_i32(payload, nb);
      }
      for (const int nb : adj_[static_cast<std::size_t>(node)])
        out.push_back(Send{nb, payload});
    }
    return round < k_;
  }

  std::vector<NodeView> views() const {
    std::vector<NodeView> out(known_.size());
    for (std::size_t v = 0; v < known_.size(); ++v) {
      NodeView& view = out[v];
      for (const auto& [id, e] : known_[v]) {
        view.distance[id] = e.dist;
        view.inputs[id] = e.input;
      }
      for (const auto& [id, e] : known_[v]) {
        for (const int nb : e.neighbors) {
          if (id < nb && view.distance.count(nb))
            view.edges.emplace_back(id, nb);
        }
      }
      std::sort(view.edges.begin(), view.edges.end());
      view.edges.erase(std::unique(view.edges.begin(), view.edges.end()), view.edges.end());
    }
    return out;
  }

 private:
  struct Entry {
    int dist{0};
    std::string input;
    std::vector<int> neighbors;
  };
  const Adjacency& adj_;
  const std::vector<std::string>& inputs_;
  int k_;
  std::vector<std::map<int, Entry>> known_;
};

}  // namespace detail

/// Runs the k-round flooding protocol; afterwards every node holds exactly
/// the nodes within k hops (with exact distances), their inputs, and the
/// induced edges among them.
inline std::vector<NodeView> gather_ball(const Adjacency& adj,
                                         const std::vector<std::string>& node_inputs,
                                         int k, RoundLog* log = nullptr) {
  if (k < 0) throw ConfigError("gather_ball: radius must be >= 0");
  if (node_inputs.size() != adj.size())
    throw ConfigError("gather_ball: one input per node required");
  detail::GatherProtocol proto(adj, node_inputs, k);
  RoundLog rl = run_protocol(adj, proto);
  if (log) *log = rl;
  return proto.views();
}

}  // namespace swarm_assign
