#include "braidsig/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "braidsig/fence.hpp"
#include "braidsig/garside.hpp"
#include "braidsig/seifert.hpp"

namespace braidsig {

int closure_signature(const BraidWord& word) {
    return inertia_of(symmetrize(seifert_matrix(word).entries)).signature();
}

LinkInvariants invariants(const BraidWord& word) {
    const auto [b1, c] = betti_and_c(word);
    const Inertia in = inertia_of(symmetrize(seifert_matrix(word).entries));
    return LinkInvariants{b1, c, in.signature(), in.zero};
}

int defect(const BraidWord& u, const BraidWord& v) {
    if (u.strands() != v.strands())
        throw std::invalid_argument("strand mismatch in defect");
    if (!u.is_positive() || !v.is_positive())
        throw std::invalid_argument("defect requires positive words");
    const int s = closure_signature(u.concat(v)) - closure_signature(u) -
                  closure_signature(v);
    return s < 0 ? -s : s;
}

ReductionResult reduction_decompose(const BraidWord& word, int b_target) {
    if (!word.is_positive())
        throw std::invalid_argument("reduction requires a positive word");
    const int b = word.strands();
    if (b_target < 2 || b_target >= b)
        throw std::invalid_argument("b_target must satisfy 2 <= b_target < strands");
    const auto [b1, c] = betti_and_c(word);
    if (c != 1)
        throw std::invalid_argument("reduction requires c = 1; split the word first");

    std::vector<int> count(b, 0);
    for (const Letter& l : word.letters()) ++count[l.index];

    // Deleting all but the leftmost occurrence in residue class i costs
    // sum (count[k]-1) over k ≡ i (mod b_target); maximize what is left.
    int best_i = 1;
    int best_drop = INT_MAX;
    for (int i = 1; i <= b_target; ++i) {
        int drop = 0;
        for (int k = i; k <= b - 1; k += b_target) drop += count[k] - 1;
        if (drop < best_drop) {
            best_drop = drop;
            best_i = i;
        }
    }

    std::vector<bool> is_cut(b, false);
    for (int k = best_i; k <= b - 1; k += b_target) is_cut[k] = true;

    std::vector<Letter> reduced_letters;
    std::vector<bool> seen(b, false);
    for (const Letter& l : word.letters()) {
        if (is_cut[l.index]) {
            if (seen[l.index]) continue;
            seen[l.index] = true;
        }
        reduced_letters.push_back(l);
    }
    BraidWord reduced(b, std::move(reduced_letters));

    // Cut columns carry a single bar each, so the closure splits as a
    // connected sum along them; factor j lives on strands (prev_cut, cut].
    std::vector<BraidWord> components;
    int prev_cut = 0;
    auto emit = [&](int lo_excl, int hi_incl) {
        std::vector<Letter> piece;
        for (const Letter& l : reduced.letters())
            if (l.index > lo_excl && l.index < hi_incl)
                piece.push_back(Letter{l.index - lo_excl, 1});
        components.push_back(BraidWord(hi_incl - lo_excl, std::move(piece)));
    };
    for (int k = best_i; k <= b - 1; k += b_target) {
        emit(prev_cut, k);
        prev_cut = k;
    }
    emit(prev_cut, b);

    return ReductionResult{best_i, std::move(reduced), std::move(components)};
}

BraidWord block_target_word(BlockTarget t) {
    switch (t) {
        case BlockTarget::Delta:
            return BraidWord::parse("a1 a3 a2 a1 a3 a2", 4);
        case BlockTarget::L:
            return BraidWord::parse("a1 a2 a3 a1 a2 a3", 4);
        case BlockTarget::R:
            return BraidWord::parse("a3 a2 a1 a3 a2 a1", 4);
    }
    throw std::logic_error("unknown block target");
}

const char* block_target_name(BlockTarget t) {
    switch (t) {
        case BlockTarget::Delta:
            return "Delta";
        case BlockTarget::L:
            return "L";
        case BlockTarget::R:
            return "R";
    }
    throw std::logic_error("unknown block target");
}

namespace {

BraidWord insert_letter(const BraidWord& w, int position, int generator) {
    std::vector<Letter> letters = w.letters();
    letters.insert(letters.begin() + position, Letter{generator, 1});
    return BraidWord(w.strands(), std::move(letters));
}

const NormalForm& exceptional_nf(int which) {
    static const NormalForm nf0 = normal_form(BraidWord::parse("a2 a1 a1 a2", 4));
    static const NormalForm nf1 = normal_form(BraidWord::parse("a2 a3 a3 a2", 4));
    return which == 0 ? nf0 : nf1;
}

bool is_exceptional_block(const BraidWord& block) {
    const NormalForm nf = normal_form(block);
    return nf == exceptional_nf(0) || nf == exceptional_nf(1);
}

// All positive spellings of the braid of w (same length), by closing under
// the braid relations; sorted for determinism.
std::vector<BraidWord> positive_spellings(const BraidWord& w) {
    std::vector<std::vector<int>> queue;
    std::set<std::vector<int>> seen;
    std::vector<int> start;
    for (const Letter& l : w.letters()) start.push_back(l.index);
    seen.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
        const std::vector<int> cur = queue.back();
        queue.pop_back();
        const int l = static_cast<int>(cur.size());
        auto push = [&](std::vector<int> next) {
            if (seen.insert(next).second) queue.push_back(std::move(next));
        };
        for (int i = 0; i + 1 < l; ++i)
            if (std::abs(cur[i] - cur[i + 1]) >= 2) {
                std::vector<int> next = cur;
                std::swap(next[i], next[i + 1]);
                push(std::move(next));
            }
        for (int i = 0; i + 2 < l; ++i)
            if (cur[i] == cur[i + 2] && std::abs(cur[i] - cur[i + 1]) == 1) {
                std::vector<int> next = cur;
                std::swap(next[i], next[i + 1]);
                next[i + 2] = next[i];
                push(std::move(next));
            }
    }
    std::vector<BraidWord> out;
    for (const std::vector<int>& idx : seen) {
        std::vector<Letter> letters;
        for (int v : idx) letters.push_back(Letter{v, 1});
        out.push_back(BraidWord(w.strands(), std::move(letters)));
    }
    return out;
}

}  // namespace

BlockCompletion complete_block(const BraidWord& block) {
    if (block.strands() != 4 || block.length() != 4 || !block.is_positive())
        throw std::invalid_argument("complete_block wants a positive length-4 word on 4 strands");

    BlockCompletion out;
    out.block = block;
    if (is_exceptional_block(block)) return out;

    static const std::array<NormalForm, 3> target_nfs = {
        normal_form(block_target_word(BlockTarget::Delta)),
        normal_form(block_target_word(BlockTarget::L)),
        normal_form(block_target_word(BlockTarget::R)),
    };
    static const std::array<BlockTarget, 3> targets = {
        BlockTarget::Delta, BlockTarget::L, BlockTarget::R};

    // First insertion, into any spelling of the block: collect the braid
    // classes reachable, each with its first witness.
    struct FirstStep {
        BraidWord host{4};
        Insertion ins{0, 0};
    };
    std::map<std::string, FirstStep> reachable;
    for (const BraidWord& host : positive_spellings(block))
        for (int p1 = 0; p1 <= 4; ++p1)
            for (int g1 = 1; g1 <= 3; ++g1) {
                const BraidWord w5 = insert_letter(host, p1, g1);
                reachable.emplace(normal_form(w5).canonical(),
                                  FirstStep{host, Insertion{p1, g1}});
            }

    // Second insertion, into any spelling of any reachable intermediate.
    for (const auto& [key5, first] : reachable) {
        const BraidWord w5 = insert_letter(first.host, first.ins.position,
                                           first.ins.generator);
        for (const BraidWord& host5 : positive_spellings(w5))
            for (int p2 = 0; p2 <= 5; ++p2)
                for (int g2 = 1; g2 <= 3; ++g2) {
                    const BraidWord w6 = insert_letter(host5, p2, g2);
                    const NormalForm nf = normal_form(w6);
                    for (int t = 0; t < 3; ++t) {
                        if (nf == target_nfs[t]) {
                            out.insertions = {first.ins, Insertion{p2, g2}};
                            out.target = targets[t];
                            out.first_host = first.host;
                            out.second_host = host5;
                            out.completed = w6;
                            return out;
                        }
                    }
                }
    }
    throw std::logic_error("length-4 block admits no completion; this cannot happen");
}

PowerCertificate power_certificate(const BraidWord& word, int n) {
    if (word.strands() != 4)
        throw std::invalid_argument("certificate requires a 4-strand word");
    if (!word.is_positive())
        throw std::invalid_argument("certificate requires a positive word");
    if (n <= 0 || n % 4 != 0)
        throw std::invalid_argument("power must be a positive multiple of 4");

    const BraidWord power_word = word.power(n);
    const int total = power_word.length();
    const int m = total / 4;

    auto block_at = [](const BraidWord& w, int j) {
        std::vector<Letter> letters(w.letters().begin() + 4 * j,
                                    w.letters().begin() + 4 * j + 4);
        return BraidWord(4, std::move(letters));
    };
    auto count_exceptional = [&](const BraidWord& w) {
        int k = 0;
        for (int j = 0; j < m; ++j)
            if (is_exceptional_block(block_at(w, j))) ++k;
        return k;
    };

    int best_shift = 0;
    int best_k = INT_MAX;
    for (int s = 0; s <= 2; ++s) {
        if (s > total) break;
        const int k = count_exceptional(power_word.cyclic_shift(s));
        if (k < best_k) {
            best_k = k;
            best_shift = s;
        }
    }
    if (best_k == INT_MAX) best_k = 0;
    if (12LL * best_k > total)
        throw std::logic_error("no cyclic shift achieves 12k <= nl");

    const BraidWord chosen =
        power_word.cyclic_shift(std::min(best_shift, total));
    BraidWord tilde(4);
    for (int j = 0; j < m; ++j) {
        const BraidWord block = block_at(chosen, j);
        if (is_exceptional_block(block)) {
            tilde = tilde.concat(block);
        } else {
            const BlockCompletion comp = complete_block(block);
            tilde = tilde.concat(block_target_word(*comp.target));
        }
    }

    PowerCertificate cert;
    cert.k = best_k;
    cert.shift_used = best_shift;
    cert.tilde_word = tilde;
    cert.measured = -closure_signature(tilde.concat(tilde.rotate180()));
    cert.rhs = 2LL * best_k + 8LL * (m - best_k) - 1;
    cert.certificate_holds = cert.measured >= cert.rhs;
    cert.minus_sigma_power = -closure_signature(power_word);
    cert.bound = Rational(5LL * total, 12) - 2;
    cert.bound_holds = Rational(cert.minus_sigma_power) >= cert.bound;
    return cert;
}

AsymptoticEstimate asymptotic_sigma(const BraidWord& word, int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    if (!word.is_positive())
        throw std::invalid_argument("asymptotic_sigma requires a positive word");
    AsymptoticEstimate est;
    est.word = word;
    est.n_used = n_max;
    est.estimate = Rational(closure_signature(word.power(n_max)), n_max);
    const Rational halfwidth(word.strands() - 1, n_max);
    est.lower = est.estimate - halfwidth;
    est.upper = est.estimate + halfwidth;
    return est;
}

namespace {

// Word values are generator indices 1..b-1; c = 1 iff all appear.
bool is_minimal_rotation(const std::vector<int>& w) {
    const int l = static_cast<int>(w.size());
    for (int r = 1; r < l; ++r) {
        for (int t = 0; t < l; ++t) {
            const int a = w[(r + t) % l];
            if (a != w[t]) {
                if (a < w[t]) return false;
                break;
            }
        }
    }
    return true;
}

struct EnumTask {
    int length;
    std::vector<int> prefix;
};

struct WorkerResult {
    std::map<std::string, ClassRecord> classes;
    unsigned long long words = 0;
};

void enumerate_worker(int b, const std::vector<EnumTask>& tasks,
                      std::atomic<std::size_t>& next, WorkerResult& result,
                      bool progress) {
    const int gens = b - 1;
    for (;;) {
        const std::size_t t = next.fetch_add(1);
        if (t >= tasks.size()) break;
        const EnumTask& task = tasks[t];
        const int l = task.length;
        std::vector<int> w(task.prefix);
        w.resize(l, 1);
        const int fixed = static_cast<int>(task.prefix.size());

        auto process = [&](const std::vector<int>& word_vals) {
            std::vector<bool> used(b, false);
            for (int v : word_vals) used[v] = true;
            for (int g = 1; g <= gens; ++g)
                if (!used[g]) return;
            ++result.words;
            if (!is_minimal_rotation(word_vals)) return;
            std::vector<Letter> letters;
            letters.reserve(word_vals.size());
            for (int v : word_vals) letters.push_back(Letter{v, 1});
            const BraidWord word(b, std::move(letters));
            std::string key = cyclic_canonical_key(word);
            auto it = result.classes.find(key);
            if (it == result.classes.end()) {
                ClassRecord rec;
                rec.word = word.format();
                rec.length = l;
                rec.b1 = l - b + 1;
                rec.sigma = closure_signature(word);
                result.classes.emplace(std::move(key), std::move(rec));
            } else if (word.format() < it->second.word) {
                it->second.word = word.format();
            }
        };

        // Odometer over the suffix positions.
        for (;;) {
            process(w);
            int pos = l - 1;
            while (pos >= fixed && w[pos] == gens) {
                w[pos] = 1;
                --pos;
            }
            if (pos < fixed) break;
            ++w[pos];
        }
        if (progress) {
            static std::mutex mu;
            std::lock_guard<std::mutex> lock(mu);
            std::cerr << "enumerate: task " << (t + 1) << "/" << tasks.size()
                      << " (length " << l << ") done\n";
        }
    }
}

}  // namespace

std::vector<ClassRecord> enumerate_positive_classes(int b, int l_max, int jobs,
                                                    unsigned long long* words_checked,
                                                    bool progress) {
    if (b < 2) throw std::invalid_argument("enumeration requires >= 2 strands");
    if (b > 5 || l_max > 14)
        throw std::invalid_argument("enumeration is supported for b <= 5 and length <= 14");
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;

    const int gens = b - 1;
    std::vector<EnumTask> tasks;
    for (int l = b - 1; l <= l_max; ++l) {
        const int depth = std::min(3, l);
        std::vector<int> prefix(depth, 1);
        for (;;) {
            tasks.push_back(EnumTask{l, prefix});
            int pos = depth - 1;
            while (pos >= 0 && prefix[pos] == gens) {
                prefix[pos] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++prefix[pos];
        }
    }

    std::atomic<std::size_t> next{0};
    std::vector<WorkerResult> results(jobs);
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int j = 0; j < jobs; ++j)
        threads.emplace_back([&, j] {
            enumerate_worker(b, tasks, next, results[j], progress);
        });
    for (std::thread& th : threads) th.join();

    std::map<std::string, ClassRecord> merged;
    unsigned long long words = 0;
    for (WorkerResult& r : results) {
        words += r.words;
        for (auto& [key, rec] : r.classes) {
            auto it = merged.find(key);
            if (it == merged.end())
                merged.emplace(key, std::move(rec));
            else if (rec.word < it->second.word)
                it->second.word = rec.word;
        }
    }
    if (words_checked) *words_checked = words;

    std::vector<ClassRecord> out;
    out.reserve(merged.size());
    for (auto& [key, rec] : merged) out.push_back(std::move(rec));
    std::sort(out.begin(), out.end(), [](const ClassRecord& a, const ClassRecord& b2) {
        return a.length != b2.length ? a.length < b2.length : a.word < b2.word;
    });
    return out;
}

BoundReport verify_bound(int b, int l_max, const Rational& bound, bool strict,
                         int jobs, bool progress) {
    BoundReport report;
    report.strands = b;
    report.l_max = l_max;
    report.bound = bound;
    report.strict = strict;

    const std::vector<ClassRecord> classes =
        enumerate_positive_classes(b, l_max, jobs, &report.words_checked, progress);
    report.classes_checked = classes.size();

    for (const ClassRecord& rec : classes) {
        if (rec.b1 == 0) continue;  // trivial closure
        const Rational lhs(-rec.sigma);
        const Rational rhs = bound * rec.b1;
        const bool ok = strict ? (lhs > rhs) : (lhs >= rhs);
        if (!ok)
            report.counterexamples.push_back(
                Counterexample{rec.word, rec.length, rec.b1, rec.sigma});
    }
    return report;
}

}  // namespace braidsig
