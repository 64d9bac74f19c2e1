// Copyright 2026 The muxqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "muxqec/vh_decoder.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace muxqec {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct LineKey {
    LineAxis axis;
    std::size_t line;
};

LineKey line_of(const HgpMeta& meta, std::size_t q, ErrorType t) {
    HgpCoord c = meta.coord(q);
    bool first = c.block == QubitBlock::First;
    if (t == ErrorType::Z) return first ? LineKey{LineAxis::Vertical, c.col} : LineKey{LineAxis::Horizontal, meta.n1 + c.row};
    return first ? LineKey{LineAxis::Horizontal, c.row} : LineKey{LineAxis::Vertical, meta.n2 + c.col};
}

std::string set_label(const ClassicalStoppingSet& s) {
    return fmt::format("{}{}", s.axis == LineAxis::Vertical ? 'V' : 'H', s.line);
}

enum class NodeState { Unsolved, Delegated, Root };

struct Node {
    NodeState state = NodeState::Unsolved;
    std::size_t parent = kNone;
    std::size_t parent_check = kNone;
    /// Column of this set's free variable in the parent's system, if any.
    std::size_t virtual_col = kNone;
    std::vector<std::size_t> children;
    /// (child, shared check) for each free column handed up by a child.
    std::vector<std::pair<std::size_t, std::size_t>> virtuals;
    BitVector x0;
    BitVector toggle;
    BitVector x;
    std::size_t unsolved_neighbors = 0;
    bool poisoned = false;
};

class VhSolver {
   public:
    VhSolver(const DecodingContext& ctx, ErrorType t, const BitVector& residual, const BitVector& syndrome,
             DecodeTrace* trace)
        : graph_(ctx.graph(t)), syn_(syndrome), row_of_(graph_.num_checks(), kNone), trace_(trace) {
        result_.sets = vh_partition(ctx, residual, t);
        nodes_.resize(result_.sets.size());
        for (std::size_t i = 0; i < nodes_.size(); ++i) nodes_[i].unsolved_neighbors = result_.sets[i].shared.size();
        result_.resolved = BitVector(residual.size());
        result_.correction = BitVector(residual.size());
    }

    VhResult run() {
        while (true) {
            std::size_t pick = kNone;
            for (std::size_t i = 0; i < nodes_.size(); ++i) {
                if (nodes_[i].state != NodeState::Unsolved || nodes_[i].unsolved_neighbors > 1) continue;
                if (pick == kNone || nodes_[i].unsolved_neighbors < nodes_[pick].unsolved_neighbors) pick = i;
            }
            if (pick == kNone) break;
            if (nodes_[pick].unsolved_neighbors == 0) {
                solve_root(pick);
            } else {
                delegate(pick);
            }
        }
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            if (nodes_[i].state == NodeState::Unsolved) result_.cycle.push_back(i);
        }
        if (!result_.cycle.empty() && trace_) {
            std::vector<std::string> labels;
            for (std::size_t i : result_.cycle) labels.push_back(set_label(result_.sets[i]));
            trace_->add(fmt::format("vh: cycle of stopping sets {}", fmt::join(labels, " ")));
        }
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            if (nodes_[i].state == NodeState::Root && !nodes_[i].poisoned) finalize(i);
        }
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            if (nodes_[i].x.size() == 0) result_.unresolved += result_.sets[i].qubits.size();
        }
        return std::move(result_);
    }

   private:
    const TannerGraph& graph_;
    BitVector syn_;
    std::vector<std::size_t> row_of_;
    DecodeTrace* trace_;
    VhResult result_;
    std::vector<Node> nodes_;

    struct Local {
        BinaryMatrix a;
        BitVector rhs;
    };

    Local build(std::size_t si, std::size_t excluded) {
        const ClassicalStoppingSet& set = result_.sets[si];
        const Node& node = nodes_[si];
        std::size_t rows = 0;
        for (std::size_t c : set.checks) {
            if (c != excluded) row_of_[c] = rows++;
        }
        const std::size_t nq = set.qubits.size();
        Local loc{BinaryMatrix(rows, nq + node.virtuals.size()), BitVector(rows)};
        for (std::size_t qi = 0; qi < nq; ++qi) {
            for (std::uint32_t c : graph_.bit_checks(set.qubits[qi])) {
                if (row_of_[c] != kNone) loc.a.set(row_of_[c], qi);
            }
        }
        for (std::size_t j = 0; j < node.virtuals.size(); ++j) loc.a.set(row_of_[node.virtuals[j].second], nq + j);
        for (std::size_t c : set.checks) {
            if (row_of_[c] != kNone && syn_.get(c)) loc.rhs.set(row_of_[c]);
        }
        for (std::size_t c : set.checks) row_of_[c] = kNone;
        return loc;
    }

    void solve_root(std::size_t si) {
        Node& node = nodes_[si];
        node.state = NodeState::Root;
        Local loc = build(si, kNone);
        auto x = solve(loc.a, loc.rhs);
        if (!x) {
            node.poisoned = true;
            result_.inconsistent.push_back(si);
            if (trace_) trace_->add(fmt::format("vh: {} inconsistent", set_label(result_.sets[si])));
            return;
        }
        node.x0 = std::move(*x);
        if (trace_) {
            trace_->add(fmt::format("vh: solve {} ({} qubits, {} free columns)", set_label(result_.sets[si]),
                                    result_.sets[si].qubits.size(), node.virtuals.size()));
        }
    }

    void delegate(std::size_t si) {
        const ClassicalStoppingSet& set = result_.sets[si];
        Node& node = nodes_[si];
        std::size_t parent = kNone, check = kNone;
        for (const SharedCheck& sc : set.shared) {
            if (nodes_[sc.neighbor].state == NodeState::Unsolved) {
                parent = sc.neighbor;
                check = sc.check;
            }
        }
        node.state = NodeState::Delegated;
        node.parent = parent;
        node.parent_check = check;
        Node& up = nodes_[parent];
        up.children.push_back(si);
        --up.unsolved_neighbors;

        Local loc = build(si, check);
        auto x = solve(loc.a, loc.rhs);
        if (!x) {
            node.poisoned = true;
            up.poisoned = true;
            result_.inconsistent.push_back(si);
            if (trace_) trace_->add(fmt::format("vh: {} inconsistent", set_label(set)));
            return;
        }
        if (node.poisoned) up.poisoned = true;
        BitVector r(loc.a.cols());
        for (std::size_t qi = 0; qi < set.qubits.size(); ++qi) {
            auto cs = graph_.bit_checks(set.qubits[qi]);
            if (std::find(cs.begin(), cs.end(), check) != cs.end()) r.set(qi);
        }
        if (r.dot(*x)) syn_.flip(check);
        node.x0 = std::move(*x);
        for (auto& k : nullspace_basis(loc.a)) {
            if (r.dot(k)) {
                node.toggle = std::move(k);
                break;
            }
        }
        if (node.toggle.size() != 0) {
            node.virtual_col = up.virtuals.size();
            up.virtuals.emplace_back(si, check);
        }
        if (trace_) {
            trace_->add(fmt::format("vh: solve {} against {} at check {} ({})", set_label(set),
                                    set_label(result_.sets[parent]), check,
                                    node.toggle.size() != 0 ? "free" : "fixed"));
        }
    }

    void finalize(std::size_t root) {
        nodes_[root].x = nodes_[root].x0;
        std::vector<std::size_t> stack{root};
        while (!stack.empty()) {
            std::size_t si = stack.back();
            stack.pop_back();
            Node& node = nodes_[si];
            const ClassicalStoppingSet& set = result_.sets[si];
            const std::size_t nq = set.qubits.size();
            for (std::size_t qi = 0; qi < nq; ++qi) {
                result_.resolved.set(set.qubits[qi]);
                if (node.x.get(qi)) result_.correction.set(set.qubits[qi]);
            }
            for (std::size_t child : node.children) {
                Node& ch = nodes_[child];
                ch.x = ch.x0;
                if (ch.virtual_col != kNone && node.x.get(nq + ch.virtual_col)) ch.x ^= ch.toggle;
                stack.push_back(child);
            }
        }
    }
};

}  // namespace

std::vector<ClassicalStoppingSet> vh_partition(const DecodingContext& ctx, const BitVector& residual, ErrorType t) {
    const CssCode& code = ctx.code();
    if (!code.hgp) throw UnsupportedCode("vh_partition: code '" + code.name + "' has no hypergraph-product layout");
    const HgpMeta& meta = *code.hgp;
    std::vector<std::vector<std::size_t>> vertical(meta.n2 + meta.r2), horizontal(meta.n1 + meta.r1);
    for (std::size_t q : residual.support()) {
        LineKey k = line_of(meta, q, t);
        (k.axis == LineAxis::Vertical ? vertical : horizontal)[k.line].push_back(q);
    }
    std::vector<ClassicalStoppingSet> sets;
    for (auto axis : {LineAxis::Vertical, LineAxis::Horizontal}) {
        auto& lines = axis == LineAxis::Vertical ? vertical : horizontal;
        for (std::size_t l = 0; l < lines.size(); ++l) {
            if (!lines[l].empty()) sets.push_back({axis, l, std::move(lines[l]), {}, {}});
        }
    }
    const TannerGraph& g = ctx.graph(t);
    std::vector<std::size_t> owner(g.num_checks(), kNone);
    for (std::size_t si = 0; si < sets.size(); ++si) {
        auto& checks = sets[si].checks;
        for (std::size_t q : sets[si].qubits) {
            for (std::uint32_t c : g.bit_checks(q)) checks.push_back(c);
        }
        std::sort(checks.begin(), checks.end());
        checks.erase(std::unique(checks.begin(), checks.end()), checks.end());
        for (std::size_t c : checks) {
            if (owner[c] == kNone) {
                owner[c] = si;
                continue;
            }
            std::size_t other = owner[c];
            if (sets[other].axis == sets[si].axis) throw std::logic_error("vh_partition: parallel lines share a check");
            sets[other].shared.push_back({si, c});
            sets[si].shared.push_back({other, c});
        }
    }
    for (auto& s : sets) {
        std::sort(s.shared.begin(), s.shared.end(), [](const SharedCheck& a, const SharedCheck& b) {
            return a.check < b.check;
        });
    }
    return sets;
}

std::vector<ClassicalStoppingSet> vh_partition(const CssCode& code, const ErasurePattern& residual, ErrorType t) {
    DecodingContext ctx(code);
    return vh_partition(ctx, residual.mask, t);
}

VhResult vh_solve(const DecodingContext& ctx, ErrorType t, const BitVector& residual, const BitVector& syndrome,
                  DecodeTrace* trace) {
    VhSolver solver(ctx, t, residual, syndrome, trace);
    return solver.run();
}

DecodeOutcome vh_decode(const DecodingContext& ctx, const ErasurePattern& residual, const Syndromes& s, Sides sides,
                        DecodeTrace* trace) {
    const std::size_t n = ctx.code().n;
    DecodeOutcome out;
    out.correction = PauliFrame(n);
    out.residual_x = ErasurePattern(n);
    out.residual_z = ErasurePattern(n);
    for (ErrorType t : {ErrorType::Z, ErrorType::X}) {
        if (!sides.has(t)) continue;
        VhResult r = vh_solve(ctx, t, residual.mask, syndrome_for(s, t), trace);
        frame_part(out.correction, t) = r.correction;
        BitVector left = residual.mask;
        left ^= r.resolved;
        (t == ErrorType::X ? out.residual_x : out.residual_z) = ErasurePattern(left);
        if (!r.complete()) {
            out.status = DecodeStatus::DecoderFailure;
            out.failure = fmt::format("{} errors: {} sets in a cycle, {} inconsistent", to_string(t), r.cycle.size(),
                                      r.inconsistent.size());
        }
    }
    return out;
}

}  // namespace muxqec
