// Canonical labeling of code digraphs by individualization and refinement.
//
// The digraphs have a rigid two-layer shape: codeword vertices send arcs only
// to slot vertices, slots send exactly one arc to their twin, and nothing
// points back at a codeword. Refinement exploits this: slot cells can split
// codeword cells and other slot cells, codeword cells can split slot cells,
// and codeword cells can never split each other. Only slot cells are ever
// individualized; once the slots are discrete, the minimal ordering of the
// codeword vertices inside each cell is obtained by sorting their relabeled
// arc masks (distinct codewords always have distinct arc sets).

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>

#include "tcc/equivalence.hpp"

namespace tcc {

namespace {

constexpr int kMaxCwWords = 4;  // 3^5 - 1 = 242 codeword vertices at most

struct Splitter {
    bool is_slot = false;
    uint32_t slot_mask = 0;
    std::array<uint64_t, kMaxCwWords> cw_words{};
};

struct State {
    std::vector<int> lab, pos, cellstart, celllen;
};

class Canon {
  public:
    explicit Canon(const CodeDigraph& g)
        : cw_(static_cast<int>(g.codeword_count())),
          ns_(static_cast<int>(g.slot_count())),
          V_(cw_ + ns_),
          arcs_(g.codeword_arcs) {
        slot_in_.assign(ns_, {});
        for (int v = 0; v < cw_; ++v) {
            uint32_t m = arcs_[v];
            while (m) {
                const int t = std::countr_zero(m);
                m &= m - 1;
                slot_in_[t][v >> 6] |= uint64_t(1) << (v & 63);
            }
        }

        lab_.resize(V_);
        pos_.resize(V_);
        cellstart_.resize(V_);
        celllen_.assign(V_, 0);

        // initial cells: codewords grouped by weight (ascending), slots together
        std::vector<int> order(cw_);
        for (int v = 0; v < cw_; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.codeword_weight[a] < g.codeword_weight[b]; });
        for (int i = 0; i < cw_; ++i) lab_[i] = order[i];
        for (int i = 0; i < ns_; ++i) lab_[cw_ + i] = cw_ + i;
        for (int i = 0; i < V_; ++i) pos_[lab_[i]] = i;
        int s = 0;
        for (int i = 1; i <= cw_; ++i) {
            if (i == cw_ || g.codeword_weight[lab_[i]] != g.codeword_weight[lab_[s]]) {
                celllen_[s] = i - s;
                for (int q = s; q < i; ++q) cellstart_[q] = s;
                s = i;
            }
        }
        celllen_[cw_] = ns_;
        for (int q = cw_; q < V_; ++q) cellstart_[q] = cw_;

        for (int p = 0; p < V_; p += celllen_[p]) enqueue_cell(p);
    }

    void run() {
        refine();
        search();
    }

    // results
    std::vector<uint32_t> best_masks;   // canonical codeword rows (bits = slot positions)
    std::vector<uint8_t> best_twins;    // canonical twin position per slot position
    SlotPerm best_slotlab;              // canonical position -> slot index
    bool have_best = false;
    std::vector<SlotPerm> gens;         // automorphisms on slot indices

  private:
    int cw_, ns_, V_;
    const std::vector<uint32_t>& arcs_;
    std::vector<std::array<uint64_t, kMaxCwWords>> slot_in_;

    std::vector<int> lab_, pos_, cellstart_, celllen_;
    std::vector<Splitter> queue_;
    std::vector<State> stack_;
    std::vector<int> base_;  // individualized slot indices

    std::vector<std::pair<int, int>> scratch_;  // (key, vertex)
    std::vector<uint32_t> cell_masks_;
    std::vector<uint32_t> cand_masks_;
    std::vector<uint8_t> cand_twins_;
    std::array<int, 32> remap_{};
    std::array<uint8_t, 32> slotlab_{};

    void enqueue_cell(int start) {
        Splitter sp;
        const int len = celllen_[start];
        if (start >= cw_) {
            sp.is_slot = true;
            for (int q = start; q < start + len; ++q) sp.slot_mask |= uint32_t(1) << (lab_[q] - cw_);
        } else {
            for (int q = start; q < start + len; ++q) {
                const int v = lab_[q];
                sp.cw_words[v >> 6] |= uint64_t(1) << (v & 63);
            }
        }
        queue_.push_back(sp);
    }

    template <class KeyFn>
    void split_region(int begin, int end, KeyFn key) {
        for (int p = begin; p < end;) {
            const int s = p, len = celllen_[s];
            p += len;
            if (len == 1) continue;
            scratch_.clear();
            bool differ = false;
            const int k0 = key(lab_[s]);
            for (int q = s; q < s + len; ++q) {
                const int kq = key(lab_[q]);
                scratch_.emplace_back(kq, lab_[q]);
                differ |= (kq != k0);
            }
            if (!differ) continue;
            std::stable_sort(scratch_.begin(), scratch_.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            for (int i = 0; i < len; ++i) {
                lab_[s + i] = scratch_[i].second;
                pos_[scratch_[i].second] = s + i;
            }
            int fs = s;
            for (int i = 1; i <= len; ++i) {
                if (i == len || scratch_[i].first != scratch_[i - 1].first) {
                    celllen_[fs] = s + i - fs;
                    for (int q = fs; q < s + i; ++q) cellstart_[q] = fs;
                    enqueue_cell(fs);
                    fs = s + i;
                }
            }
        }
    }

    void refine() {
        size_t qi = 0;
        while (qi < queue_.size()) {
            const Splitter sp = queue_[qi++];
            if (sp.is_slot) {
                const uint32_t m = sp.slot_mask;
                split_region(0, cw_, [&](int v) { return std::popcount(arcs_[v] & m); });
                split_region(cw_, V_, [&](int v) { return int((m >> ((v - cw_) ^ 1)) & 1u); });
            } else {
                split_region(cw_, V_, [&](int v) {
                    const auto& in = slot_in_[v - cw_];
                    int c = 0;
                    for (int w = 0; w < kMaxCwWords; ++w) c += std::popcount(in[w] & sp.cw_words[w]);
                    return c;
                });
            }
        }
        queue_.clear();
    }

    void push_state() { stack_.push_back({lab_, pos_, cellstart_, celllen_}); }

    void pop_state() {
        State& st = stack_.back();
        lab_ = std::move(st.lab);
        pos_ = std::move(st.pos);
        cellstart_ = std::move(st.cellstart);
        celllen_ = std::move(st.celllen);
        stack_.pop_back();
    }

    void individualize(int v) {
        const int s = cellstart_[pos_[v]], len = celllen_[s];
        const int pv = pos_[v], u = lab_[s];
        std::swap(lab_[s], lab_[pv]);
        pos_[u] = pv;
        pos_[v] = s;
        celllen_[s] = 1;
        cellstart_[s] = s;
        if (len > 1) {
            celllen_[s + 1] = len - 1;
            for (int q = s + 1; q < s + len; ++q) cellstart_[q] = s + 1;
            enqueue_cell(s + 1);
        }
        enqueue_cell(s);
    }

    // Orbits of the subgroup of discovered automorphisms fixing the current base.
    bool same_orbit_as_explored(int slot, const std::vector<int>& explored) {
        std::array<int, 32> parent;
        for (int i = 0; i < ns_; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const SlotPerm& g : gens) {
            bool fixes = true;
            for (int b : base_) {
                if (g[b] != b) {
                    fixes = false;
                    break;
                }
            }
            if (!fixes) continue;
            for (int i = 0; i < ns_; ++i) {
                const int a = find(i), b = find(g[i]);
                if (a != b) parent[a] = b;
            }
        }
        const int r = find(slot);
        for (int u : explored) {
            if (find(u) == r) return true;
        }
        return false;
    }

    void search() {
        int target = -1;
        for (int p = cw_; p < V_; p += celllen_[p]) {
            if (celllen_[p] > 1) {
                target = p;
                break;
            }
        }
        if (target < 0) {
            process_leaf();
            return;
        }
        const std::vector<int> members(lab_.begin() + target, lab_.begin() + target + celllen_[target]);
        std::vector<int> explored;
        for (int v : members) {
            if (!explored.empty() && same_orbit_as_explored(v - cw_, explored)) continue;
            push_state();
            individualize(v);
            refine();
            base_.push_back(v - cw_);
            search();
            base_.pop_back();
            pop_state();
            explored.push_back(v - cw_);
        }
    }

    uint32_t remap_mask(uint32_t m) const {
        uint32_t r = 0;
        while (m) {
            const int t = std::countr_zero(m);
            m &= m - 1;
            r |= uint32_t(1) << remap_[t];
        }
        return r;
    }

    void process_leaf() {
        for (int i = 0; i < ns_; ++i) {
            const int t = lab_[cw_ + i] - cw_;
            slotlab_[i] = static_cast<uint8_t>(t);
            remap_[t] = i;
        }

        cand_masks_.resize(cw_);
        cand_twins_.resize(ns_);
        int cmp = have_best ? 0 : 1;  // 1 = strictly better, 0 = equal so far
        int w = 0;
        for (int p = 0; p < cw_; p += celllen_[p]) {
            const int len = celllen_[p];
            cell_masks_.clear();
            for (int q = p; q < p + len; ++q) cell_masks_.push_back(remap_mask(arcs_[lab_[q]]));
            std::sort(cell_masks_.begin(), cell_masks_.end());
            for (uint32_t x : cell_masks_) {
                if (cmp == 0) {
                    if (x < best_masks[w])
                        cmp = 1;
                    else if (x > best_masks[w])
                        return;  // worse than the current best: abandon this leaf
                }
                cand_masks_[w++] = x;
            }
        }
        for (int i = 0; i < ns_; ++i) {
            const uint8_t t = static_cast<uint8_t>(remap_[slotlab_[i] ^ 1]);
            if (cmp == 0) {
                if (t < best_twins[i])
                    cmp = 1;
                else if (t > best_twins[i])
                    return;
            }
            cand_twins_[i] = t;
        }

        if (cmp == 1) {
            best_masks = cand_masks_;
            best_twins = cand_twins_;
            best_slotlab.assign(slotlab_.begin(), slotlab_.begin() + ns_);
            have_best = true;
            return;
        }
        // equal encodings: the two labelings differ by an automorphism
        SlotPerm g(ns_);
        bool ident = true;
        for (int i = 0; i < ns_; ++i) {
            g[best_slotlab[i]] = slotlab_[i];
            ident &= (best_slotlab[i] == slotlab_[i]);
        }
        if (ident) return;
        for (const SlotPerm& h : gens) {
            if (h == g) return;
        }
        gens.push_back(std::move(g));
    }
};

}  // namespace

namespace {

CanonicalCert serialize_cert(const CodeDigraph& d, const Canon& c) {
    const int cw = static_cast<int>(d.codeword_count());
    const int ns = static_cast<int>(d.slot_count());
    const int V = cw + ns;
    const int rowbytes = (V + 7) / 8;

    CanonicalCert cert;
    cert.bytes.reserve(6 + static_cast<size_t>(V) * rowbytes);
    cert.bytes = {'T', 'C', 'C', 0x01,
                  static_cast<uint8_t>(V & 0xff), static_cast<uint8_t>((V >> 8) & 0xff)};
    cert.bytes.resize(6 + static_cast<size_t>(V) * rowbytes, 0);
    uint8_t* rows = cert.bytes.data() + 6;
    auto set_bit = [&](int row, int col) { rows[row * rowbytes + (col >> 3)] |= uint8_t(1) << (col & 7); };
    for (int i = 0; i < cw; ++i) {
        uint32_t m = c.best_masks[i];
        while (m) {
            const int t = std::countr_zero(m);
            m &= m - 1;
            set_bit(i, cw + t);
        }
    }
    for (int i = 0; i < ns; ++i) set_bit(cw + i, cw + c.best_twins[i]);
    return cert;
}

}  // namespace

CanonicalResult canonicalize(const CodeDigraph& d) {
    Canon c(d);
    c.run();

    CanonicalResult res;
    res.cert = serialize_cert(d, c);
    res.slot_labeling = std::move(c.best_slotlab);
    res.aut_generators = std::move(c.gens);
    res.group_order = PermGroup(d.slot_count(), res.aut_generators).order();
    return res;
}

CanonicalCert canonical_cert(const CodeDigraph& d) {
    Canon c(d);
    c.run();
    return serialize_cert(d, c);
}

}  // namespace tcc
