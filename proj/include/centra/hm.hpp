#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "centra/backends.hpp"

// The bilinear-form pipeline: the group H_M = {A in GL(n,Z) : A M A^t = M},
// the conjugation action X -> C X C^t on forms, its n^2 x n^2 matrix
// (C ⊗ C under column-major vec), the reduction of H_M-conjugacy to an orbit
// problem, and the breadth-first orbit/stabilizer solver the two pipeline
// algorithms run on.

namespace centra {

struct BilinearForm {
    QMatrix m;
    bool symmetric = false;
    bool skew = false;  // informational; only non-degeneracy is required

    explicit BilinearForm(QMatrix mat) : m(std::move(mat)) {
        m.require_square();
        if (det(m).is_zero()) throw std::invalid_argument("degenerate bilinear form");
        symmetric = m == m.transpose();
        skew = m == -m.transpose();
    }
    int dim() const { return m.rows(); }
};

inline bool is_in_hm(const QMatrix& a, const BilinearForm& form) {
    if (!a.is_square() || a.rows() != form.dim()) throw std::invalid_argument("size mismatch");
    if (!a.is_integral()) return false;
    Rat d = det(a);
    if (d != 1 && d != -1) return false;
    return a * form.m * a.transpose() == form.m;
}

// Matrix of X -> C X C^t in the canonical basis of M_n(Q); equals C ⊗ C
// under column-major vectorization.
struct KronActionMatrix {
    QMatrix c;
    QMatrix mat;
};

inline KronActionMatrix kron_action_matrix(const QMatrix& c) {
    c.require_square();
    return KronActionMatrix{c, kron(c, c)};
}

// Word over a fixed generator list: letters (index, exponent +-1), evaluated
// as a left-to-right matrix product.
struct OrbitWord {
    std::vector<std::pair<int, int>> letters;

    OrbitWord inverse() const {
        OrbitWord w;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it)
            w.letters.emplace_back(it->first, -it->second);
        return w;
    }
};

inline QMatrix evaluate_word(const OrbitWord& word, const std::vector<QMatrix>& gens, int n) {
    QMatrix acc = QMatrix::identity(n);
    for (const auto& [index, exp] : word.letters) {
        if (index < 0 || index >= int(gens.size())) throw std::invalid_argument("bad letter");
        acc = acc * (exp > 0 ? gens[index] : inverse(gens[index]));
    }
    return acc;
}

inline QMatrix evaluate_action_word(const OrbitWord& word, const std::vector<KronActionMatrix>& gens) {
    if (gens.empty()) throw std::invalid_argument("empty generator list");
    std::vector<QMatrix> mats;
    mats.reserve(gens.size());
    for (const auto& g : gens) mats.push_back(g.mat);
    return evaluate_word(word, mats, gens[0].mat.rows());
}

// v = vec(M), w = vec(P0^-1 M P0^-t): T and T^ are H_M-conjugate iff some
// centralizer action sends v to w. The precondition on P0 is verified.
inline std::pair<std::vector<Rat>, std::vector<Rat>> reduce_to_orbit(const QMatrix& t,
                                                                     const QMatrix& that,
                                                                     const BilinearForm& form,
                                                                     const QMatrix& p0) {
    if (!is_unimodular(p0)) throw std::invalid_argument("P0 must be in GL(n,Z)");
    if (p0 * t != that * p0) throw std::invalid_argument("P0 does not conjugate T to T^");
    QMatrix p0inv = inverse(p0);
    return {vec(form.m), vec(p0inv * form.m * p0inv.transpose())};
}

template <class Payload>
using OrbitDecision = Decision3<Payload>;

struct OrbitLimits {
    int depth = 12;
    long long max_visited = 1000000;
};

// Breadth-first search over words in the generators and their inverses
// applied to `start`. Yes(word) when `target` is reached (eval(word) sends
// start to target); No when the orbit closes without reaching it; Unknown on
// depth or size exhaustion. Level-synchronous and deterministic.
inline Decision3<OrbitWord> orbit_solve(const std::vector<KronActionMatrix>& gens,
                                        const std::vector<Rat>& start,
                                        const std::vector<Rat>& target, const OrbitLimits& lim) {
    const int m = int(start.size());
    if (int(target.size()) != m) throw std::invalid_argument("dimension mismatch");
    std::vector<QMatrix> step;  // generator matrices followed by their inverses
    for (const auto& g : gens) {
        if (g.mat.rows() != m || g.mat.cols() != m)
            throw std::invalid_argument("generator dimension mismatch");
        if (det(g.mat).is_zero()) throw std::invalid_argument("generator not invertible");
        step.push_back(g.mat);
    }
    for (const auto& g : gens) step.push_back(inverse(g.mat));
    auto letter_of = [&](int k) {
        return k < int(gens.size()) ? std::make_pair(k, 1) : std::make_pair(k - int(gens.size()), -1);
    };

    struct Node {
        std::vector<Rat> v;
        int parent;
        int letter_index;  // index into step[]
    };
    std::vector<Node> nodes;
    std::map<std::vector<Rat>, int> seen;
    auto word_to = [&](int idx) {
        OrbitWord w;
        while (idx > 0) {
            w.letters.push_back(letter_of(nodes[idx].letter_index));
            idx = nodes[idx].parent;
        }
        return w;  // letters already in product order (last step first applied last)
    };

    if (start == target) return Decision3<OrbitWord>::yes(OrbitWord{});
    nodes.push_back({start, -1, -1});
    seen.emplace(start, 0);
    std::size_t level_begin = 0, level_end = 1;
    for (int depth = 1; depth <= lim.depth; ++depth) {
        for (std::size_t u = level_begin; u < level_end; ++u) {
            for (int k = 0; k < int(step.size()); ++k) {
                QMatrix img = apply_to_vector(step[k], nodes[u].v);
                std::vector<Rat> next(m);
                for (int i = 0; i < m; ++i) next[i] = img(i, 0);
                if (seen.count(next)) continue;
                nodes.push_back({next, int(u), k});
                seen.emplace(std::move(next), int(nodes.size()) - 1);
                if (nodes.back().v == target)
                    return Decision3<OrbitWord>::yes(word_to(int(nodes.size()) - 1));
                if ((long long)nodes.size() > lim.max_visited) {
                    SearchConfig echo;
                    echo.max_candidates = lim.max_visited;
                    return Decision3<OrbitWord>::unknown(echo);
                }
            }
        }
        if (level_end == nodes.size()) {
            // orbit closed under all generators without reaching the target
            return Decision3<OrbitWord>::no(
                Certificate{Certificate::Kind::OrbitClosed, 0,
                            "orbit of size " + std::to_string(nodes.size()) + " closed"});
        }
        level_begin = level_end;
        level_end = nodes.size();
    }
    SearchConfig echo;
    echo.coeff_bound = lim.depth;
    return Decision3<OrbitWord>::unknown(echo);
}

// Schreier generators of the stabilizer of v harvested from the orbit
// traversal: t_(g u)^-1 g t_u for every visited u and letter g. Words are
// deduplicated by their evaluated action (dropping identities and inverse
// duplicates). complete only if the orbit closed within the limits.
struct SchreierGens {
    std::vector<OrbitWord> words;
    std::vector<QMatrix> actions;  // evaluated action matrices, parallel to words
    bool complete = false;
};

inline SchreierGens stabilizer_gens(const std::vector<KronActionMatrix>& gens,
                                    const std::vector<Rat>& v, const OrbitLimits& lim) {
    const int m = int(v.size());
    std::vector<QMatrix> step;
    for (const auto& g : gens) {
        if (det(g.mat).is_zero()) throw std::invalid_argument("generator not invertible");
        step.push_back(g.mat);
    }
    for (const auto& g : gens) step.push_back(inverse(g.mat));
    auto letter_of = [&](int k) {
        return k < int(gens.size()) ? std::make_pair(k, 1) : std::make_pair(k - int(gens.size()), -1);
    };

    struct Node {
        std::vector<Rat> v;
        int parent;
        int letter_index;
    };
    std::vector<Node> nodes;
    std::map<std::vector<Rat>, int> seen;
    auto word_to = [&](int idx) {
        OrbitWord w;
        while (idx > 0) {
            w.letters.push_back(letter_of(nodes[idx].letter_index));
            idx = nodes[idx].parent;
        }
        return w;
    };

    SchreierGens out;
    const QMatrix id = QMatrix::identity(m);
    auto offer = [&](const OrbitWord& w) {
        QMatrix a = evaluate_action_word(w, gens);
        if (a == id) return;
        for (const QMatrix& kept : out.actions)
            if (kept == a || inverse(kept) == a) return;
        out.words.push_back(w);
        out.actions.push_back(std::move(a));
    };

    nodes.push_back({v, -1, -1});
    seen.emplace(v, 0);
    std::size_t level_begin = 0, level_end = 1;
    bool closed = false, truncated = false;
    for (int depth = 1; depth <= lim.depth && !closed && !truncated; ++depth) {
        for (std::size_t u = level_begin; u < level_end && !truncated; ++u) {
            for (int k = 0; k < int(step.size()); ++k) {
                QMatrix img = apply_to_vector(step[k], nodes[u].v);
                std::vector<Rat> next(m);
                for (int i = 0; i < m; ++i) next[i] = img(i, 0);
                auto it = seen.find(next);
                if (it != seen.end()) {
                    // closure edge: Schreier generator
                    OrbitWord tu = word_to(int(u));
                    OrbitWord tx = word_to(it->second);
                    OrbitWord schreier = tx.inverse();
                    schreier.letters.push_back(letter_of(k));
                    for (auto& l : tu.letters) schreier.letters.push_back(l);
                    offer(schreier);
                    continue;
                }
                nodes.push_back({next, int(u), k});
                seen.emplace(std::move(next), int(nodes.size()) - 1);
                if ((long long)nodes.size() > lim.max_visited) {
                    truncated = true;
                    break;
                }
            }
        }
        if (level_end == nodes.size()) {
            closed = true;
            break;
        }
        level_begin = level_end;
        level_end = nodes.size();
    }
    out.complete = closed && !truncated;
    return out;
}

// The verified conjugator in H_M together with its factorization.
struct HmCertificate {
    QMatrix q;   // q = p0 * c0
    QMatrix p0;  // GL(n,Z) conjugator
    QMatrix c0;  // centralizer element with c0 M c0^t = P0^-1 M P0^-t
};

struct PipelineConfig {
    SearchConfig search;
    OrbitLimits orbit;
};

namespace detail {

// Greedy generator reduction: walking the candidate list in order, an
// element is dropped exactly when it already lies in the bounded-entry part
// of the subgroup generated by the kept ones, so the generated group is
// unchanged. The closure is grown lazily and pruned at the largest entry
// seen among the candidates (bigger products can never equal a candidate).
inline std::vector<QMatrix> reduce_generators(const std::vector<QMatrix>& elements,
                                              std::size_t closure_cap = 20000) {
    if (elements.empty()) return {};
    const int n = elements[0].rows();
    Int entry_bound = 1;
    for (const QMatrix& g : elements)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) entry_bound = std::max(entry_bound, abs_int(num(g(i, j))));
    auto within = [&](const QMatrix& m) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (abs_int(num(m(i, j))) > entry_bound) return false;
        return true;
    };
    std::set<std::vector<Rat>> closure;
    std::vector<QMatrix> closure_list;
    bool capped = false;
    auto insert = [&](const QMatrix& m) {
        if (closure.size() >= closure_cap) {
            capped = true;
            return false;
        }
        if (closure.insert(vec(m)).second) {
            closure_list.push_back(m);
            return true;
        }
        return false;
    };
    insert(QMatrix::identity(n));
    std::vector<QMatrix> kept, kept_steps;
    for (const QMatrix& g : elements) {
        if (!capped && closure.count(vec(g))) continue;
        kept.push_back(g);
        kept_steps.push_back(g);
        kept_steps.push_back(inverse(g));
        if (capped) continue;
        // close under the enlarged generator set, pruned by entry size
        std::size_t frontier = 0;
        std::vector<QMatrix> todo = closure_list;
        while (frontier < todo.size() && !capped) {
            QMatrix x = todo[frontier++];
            for (const QMatrix& s : kept_steps) {
                QMatrix prod = x * s;
                if (!within(prod)) continue;
                if (insert(prod)) todo.push_back(prod);
            }
        }
    }
    return kept;
}

// C and -C induce the same action on forms, and identity actions move
// nothing: dedupe before the orbit search, remembering one preimage index
// per kept action so words can be lifted back.
struct DedupedAction {
    std::vector<KronActionMatrix> action;
    std::vector<int> preimage;  // index into the original element list
};

inline DedupedAction dedupe_actions(const std::vector<QMatrix>& elements) {
    DedupedAction out;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        KronActionMatrix a = kron_action_matrix(elements[i]);
        if (a.mat.is_identity()) continue;
        bool dup = false;
        for (const auto& kept : out.action)
            if (kept.mat == a.mat) {
                dup = true;
                break;
            }
        if (dup) continue;
        out.action.push_back(std::move(a));
        out.preimage.push_back(int(i));
    }
    return out;
}

inline OrbitWord remap_word(const OrbitWord& w, const std::vector<int>& preimage) {
    OrbitWord out;
    for (const auto& [index, exp] : w.letters) out.letters.emplace_back(preimage[index], exp);
    return out;
}

}  // namespace detail

// Algorithm: (1) GL(n,Z) conjugacy; (2) centralizer generators;
// (3) action matrices; (4) reduction to vectors; (5) orbit search from
// vec(P0^-1 M P0^-t) toward vec(M); (6) invert and lift the word;
// (7) return P0*C0, re-verified. "No" from the orbit search is only
// propagated when the generating set is certified complete.
inline Decision3<HmCertificate> conjugate_in_hm(const QMatrix& t, const QMatrix& that,
                                                const BilinearForm& form,
                                                const PipelineConfig& cfg,
                                                const GlnzBackend& backend = reference_backend()) {
    if (!t.is_square() || !that.is_square() || t.rows() != that.rows() ||
        t.rows() != form.dim())
        throw std::invalid_argument("size mismatch");
    Decision3<QMatrix> step1 = backend.conjugate(t, that, cfg.search);
    if (step1.tag == Verdict::No) {
        Decision3<HmCertificate> d;
        d.tag = Verdict::No;
        d.certificate = step1.certificate;
        return d;
    }
    if (step1.tag == Verdict::Unknown) return Decision3<HmCertificate>::unknown(cfg.search);
    const QMatrix& p0 = *step1.witness;

    GeneratingSet cz = backend.centralizer_gens(t, cfg.search);
    std::vector<QMatrix> reduced = detail::reduce_generators(cz.elements);
    detail::DedupedAction da = detail::dedupe_actions(reduced);
    auto [v, w] = reduce_to_orbit(t, that, form, p0);

    OrbitWord c_word;
    if (v == w) {
        c_word = OrbitWord{};
    } else if (da.action.empty()) {
        return Decision3<HmCertificate>::unknown(cfg.search);
    } else {
        Decision3<OrbitWord> orb = orbit_solve(da.action, w, v, cfg.orbit);
        if (orb.tag == Verdict::No) {
            if (cz.complete) {
                Decision3<HmCertificate> d;
                d.tag = Verdict::No;
                d.certificate = orb.certificate;
                d.certificate->detail += "; centralizer generators certified complete";
                return d;
            }
            return Decision3<HmCertificate>::unknown(cfg.search);
        }
        if (orb.tag == Verdict::Unknown) return Decision3<HmCertificate>::unknown(cfg.search);
        // orbit word maps w to v; the centralizer element needs v -> w
        c_word = detail::remap_word(orb.witness->inverse(), da.preimage);
    }
    QMatrix c0 = evaluate_word(c_word, reduced, t.rows());
    QMatrix p0inv = inverse(p0);
    if (c0 * form.m * c0.transpose() != p0inv * form.m * p0inv.transpose())
        throw std::logic_error("lifted centralizer element misses the orbit equation");
    QMatrix q = p0 * c0;
    if (!is_in_hm(q, form) || q * t != that * q)
        throw std::logic_error("certificate re-verification failed");
    return Decision3<HmCertificate>::yes(HmCertificate{q, p0, c0});
}

// Generating set for the centralizer of T inside H_M: stabilizer of vec(M)
// under the centralizer action, lifted back to matrices. Backend generators
// fixing vec(M) are kept verbatim; Schreier words are appended after exact
// dedup. The identity is always included.
inline GeneratingSet centralizer_in_hm(const QMatrix& t, const BilinearForm& form,
                                       const PipelineConfig& cfg,
                                       const GlnzBackend& backend = reference_backend()) {
    t.require_square();
    if (t.rows() != form.dim()) throw std::invalid_argument("size mismatch");
    GeneratingSet cz = backend.centralizer_gens(t, cfg.search);
    // no generator reduction here: Schreier words over the full backend list
    // surface more short stabilizer elements
    detail::DedupedAction da = detail::dedupe_actions(cz.elements);
    std::vector<Rat> v = vec(form.m);

    GeneratingSet out;
    out.elements.push_back(QMatrix::identity(t.rows()));
    auto add_unique = [&](const QMatrix& m) {
        for (const QMatrix& kept : out.elements)
            if (kept == m) return;
        out.elements.push_back(m);
    };
    for (const QMatrix& c : cz.elements) {
        QMatrix img = c * form.m * c.transpose();
        if (img == form.m) add_unique(c);
    }
    bool orbit_closed = true;
    if (!da.action.empty()) {
        SchreierGens sg = stabilizer_gens(da.action, v, cfg.orbit);
        orbit_closed = sg.complete;
        for (const OrbitWord& word : sg.words)
            add_unique(evaluate_word(detail::remap_word(word, da.preimage), cz.elements, t.rows()));
    }
    for (const QMatrix& g : out.elements) {
        if (!is_in_hm(g, form) || g * t != t * g)
            throw std::logic_error("H_M centralizer element re-verification failed");
    }
    out.complete = cz.complete && orbit_closed;
    return out;
}

}  // namespace centra
