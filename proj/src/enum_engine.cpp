#include "minsep/enum_engine.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "minsep/char_count.hpp"
#include "minsep/conjugacy.hpp"
#include "minsep/partition.hpp"

namespace minsep {

namespace {

struct CentElem {
    std::vector<int> rho;
    std::vector<int> rho_inv;
};

std::vector<CentElem> centralizer_table(const Perm& sigma) {
    std::vector<CentElem> out;
    for (const Perm& p : centralizer_elements(sigma))
        out.push_back(CentElem{p.images(), inverse(p).images()});
    return out;
}

/// Cycle type of img equals the multiset described by counts[len]?
bool type_matches(const std::vector<int>& img, const std::vector<int>& expected_counts,
                  std::vector<char>& seen, std::vector<int>& scratch) {
    const int n = static_cast<int>(img.size());
    std::fill(seen.begin(), seen.end(), 0);
    scratch = expected_counts;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        int j = i;
        do {
            seen[j] = 1;
            j = img[j];
            ++len;
        } while (j != i);
        if (--scratch[len] < 0) return false;
    }
    return true;
}

bool pair_transitive(const std::vector<int>& a, const std::vector<int>& b,
                     std::vector<int>& parent) {
    const int n = static_cast<int>(a.size());
    parent.resize(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < n; ++i) {
        int r = find(i), s = find(a[i]);
        if (r != s) parent[r] = s;
        r = find(i), s = find(b[i]);
        if (r != s) parent[r] = s;
    }
    const int root = find(0);
    for (int i = 1; i < n; ++i)
        if (find(i) != root) return false;
    return true;
}

/// -1 / 0 / +1: conjugate(alpha, rho) versus alpha, lexicographically,
/// without materializing the conjugate.
int conj_compare(const std::vector<int>& alpha, const CentElem& c) {
    const int n = static_cast<int>(alpha.size());
    for (int x = 0; x < n; ++x) {
        const int v = c.rho_inv[alpha[c.rho[x]]];
        if (v != alpha[x]) return v < alpha[x] ? -1 : 1;
    }
    return 0;
}

/// rho0 with conjugate(alpha, rho0) = canonical_of_type(type of alpha):
/// maps the i-th canonical block onto the i-th cycle of alpha when
/// cycles are taken in (length descending, minimum ascending) order.
Perm conjugator_to_canonical(const Perm& alpha) {
    auto cycles = cycles_of(alpha);
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::vector<int> img(alpha.degree());
    int next = 0;
    for (const auto& cyc : cycles)
        for (int pt : cyc) img[next++] = pt - 1;
    return Perm::from_images(std::move(img));
}

bool is_canonical_impl(const std::vector<int>& alpha, bool swap_allowed, const Perm& sigma,
                       const std::vector<CentElem>& cent) {
    for (const CentElem& c : cent)
        if (conj_compare(alpha, c) < 0) return false;
    if (swap_allowed) {
        const Perm alpha_p = Perm::from_images(alpha);
        const Perm rho0 = conjugator_to_canonical(alpha_p);
        const Perm beta = conjugate(sigma, rho0);
        // smallest conjugate of the swapped pair's second component
        std::vector<int> best = beta.images();
        for (const CentElem& c : cent) {
            const int n = static_cast<int>(best.size());
            bool less = false;
            for (int x = 0; x < n; ++x) {
                const int v = c.rho_inv[beta.images()[c.rho[x]]];
                if (v != best[x]) {
                    less = v < best[x];
                    break;
                }
            }
            if (less)
                for (int x = 0; x < n; ++x) best[x] = c.rho_inv[beta.images()[c.rho[x]]];
        }
        if (best < alpha) return false;
    }
    return true;
}

}  // namespace

std::string hypermap_text(const Hypermap& h) {
    std::ostringstream os;
    os << h.brin_count << '|' << cycle_string(h.sigma) << '|' << cycle_string(h.alpha) << '|'
       << cycle_string(h.phi);
    return os.str();
}

bool is_canonical(const Perm& sigma, const Perm& alpha, bool swap_allowed,
                  const std::vector<Perm>& sigma_centralizer) {
    std::vector<CentElem> cent;
    for (const Perm& p : sigma_centralizer)
        cent.push_back(CentElem{p.images(), inverse(p).images()});
    return is_canonical_impl(alpha.images(), swap_allowed, sigma, cent);
}

bool is_canonical(const Perm& sigma, const Perm& alpha, bool swap_allowed) {
    return is_canonical(sigma, alpha, swap_allowed, centralizer_elements(sigma));
}

std::vector<RgEntry> run_task(const SearchTask& t) {
    const TypeTriple& tr = t.triple;
    const int E = tr.edge_count;
    const Perm sigma = canonical_of_type(tr.S);
    const auto cent = centralizer_table(sigma);
    const bool swap_allowed = (tr.S == tr.A);
    const std::string key = tr.key();

    const int g = (E - tr.F.count() + tr.S.count() + tr.A.count()) / 2 - 1;
    const int g_r = (2 - tr.S.count() - tr.A.count() + E - tr.F.count()) / 2;

    // The streamed class determines the third permutation; the filter
    // checks the remaining cycle type.
    const Partition& remaining_type = t.iterate_alpha ? tr.F : tr.A;
    std::vector<int> expected(E + 1, 0);
    for (int p : remaining_type.parts) ++expected[p];

    const std::vector<int>& sig = sigma.images();
    std::vector<int> derived(E);
    std::vector<char> seen(E);
    std::vector<int> scratch, parent;
    std::vector<RgEntry> out;

    auto handle = [&](const std::vector<int>& streamed) {
        if (t.iterate_alpha) {
            // streamed = alpha; derive phi from sigma*alpha*phi = id
            for (int x = 0; x < E; ++x) derived[sig[streamed[x]]] = x;
        } else {
            // streamed = phi; derive alpha
            for (int x = 0; x < E; ++x) derived[streamed[sig[x]]] = x;
        }
        if (!type_matches(derived, expected, seen, scratch)) return;
        const std::vector<int>& aimg = t.iterate_alpha ? streamed : derived;
        if (!pair_transitive(sig, aimg, parent)) return;
        if (!is_canonical_impl(aimg, swap_allowed, sigma, cent)) return;
        const std::vector<int>& pimg = t.iterate_alpha ? derived : streamed;
        Hypermap h{E, sigma, Perm::from_images(aimg), Perm::from_images(pimg)};
        out.push_back(RgEntry{std::move(h), g, g_r, key});
    };
    const Partition& streamed_type = t.iterate_alpha ? tr.A : tr.F;
    for_each_in_class_images(streamed_type, t.chunk_begin, t.chunk_end, handle);
    return out;
}

std::vector<RgEntry> enumerate_Rg(int g, const EnumerateOptions& opts) {
    const auto [lo, hi] = edge_bounds(g);
    if (opts.workers < 1) throw std::invalid_argument("workers must be >= 1");

    struct TripleJob {
        TypeTriple triple;
        bool iterate_alpha;
        std::uint64_t total;
    };
    std::vector<TripleJob> jobs;
    for (int E = lo; E <= hi; ++E) {
        if (opts.edges_filter && *opts.edges_filter != E) continue;
        for (const auto& tr : admissible_type_triples(g, E)) {
            const std::uint64_t ca = class_size(tr.A);
            const std::uint64_t cf = class_size(tr.F);
            const bool ia = ca <= cf;
            jobs.push_back(TripleJob{tr, ia, ia ? ca : cf});
        }
    }

    std::vector<SearchTask> tasks;
    std::vector<size_t> task_job;
    for (size_t j = 0; j < jobs.size(); ++j) {
        const auto& job = jobs[j];
        for (std::uint64_t b = 0; b < job.total; b += opts.chunk_size) {
            tasks.push_back(SearchTask{job.triple, job.iterate_alpha, b,
                                       std::min(b + opts.chunk_size, job.total)});
            task_job.push_back(j);
        }
    }

    std::vector<std::vector<RgEntry>> results(tasks.size());
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                results[i] = run_task(tasks[i]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    const int nthreads = std::min<size_t>(opts.workers, std::max<size_t>(tasks.size(), 1));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);

    // Merge per triple in triple order; sort within a triple by
    // hypermap text so chunking and scheduling never show in output.
    std::vector<RgEntry> merged;
    std::vector<std::vector<RgEntry>> per_job(jobs.size());
    for (size_t i = 0; i < tasks.size(); ++i)
        for (auto& e : results[i]) per_job[task_job[i]].push_back(std::move(e));
    for (size_t j = 0; j < jobs.size(); ++j) {
        auto& entries = per_job[j];
        if (opts.enforce_capacity) {
            const BigInt limit = 2 * capacity_estimate(jobs[j].triple);
            if (BigInt(entries.size()) > limit) throw CapacityError(jobs[j].triple.key());
        }
        std::sort(entries.begin(), entries.end(), [](const RgEntry& a, const RgEntry& b) {
            return hypermap_text(a.hypermap) < hypermap_text(b.hypermap);
        });
        for (auto& e : entries) merged.push_back(std::move(e));
    }
    return merged;
}

std::string hypermap_class_key(const Hypermap& h) {
    const int n = h.brin_count;
    std::vector<int> rho(n);
    std::iota(rho.begin(), rho.end(), 0);
    std::string best;
    auto encode = [&](const std::vector<int>& first, const std::vector<int>& second) {
        std::string s;
        s.reserve(2 * n);
        for (int v : first) s.push_back(static_cast<char>('a' + v));
        for (int v : second) s.push_back(static_cast<char>('a' + v));
        return s;
    };
    std::vector<int> rho_inv(n), cs(n), ca(n);
    do {
        for (int i = 0; i < n; ++i) rho_inv[rho[i]] = i;
        for (int i = 0; i < n; ++i) {
            cs[i] = rho_inv[h.sigma(rho[i])];
            ca[i] = rho_inv[h.alpha(rho[i])];
        }
        std::string a = encode(cs, ca);
        std::string b = encode(ca, cs);
        if (best.empty() || a < best) best = a;
        if (b < best) best = std::move(b);
    } while (std::next_permutation(rho.begin(), rho.end()));
    return best;
}

std::vector<Hypermap> brute_force_Rg(int g, int max_E) {
    if (g < 1) throw std::invalid_argument("genus must be >= 1");
    if (max_E > 6) {
        std::ostringstream os;
        os << "brute_force_Rg: max_E = " << max_E << " means |S_E|^2 pairs with E! conjugations"
           << " each; E = 6 (518400 pairs) is the supported limit";
        throw std::invalid_argument(os.str());
    }
    std::map<std::string, Hypermap> classes;
    std::vector<int> parent;
    for (int E = 1; E <= max_E; ++E) {
        std::vector<int> simg(E);
        std::iota(simg.begin(), simg.end(), 0);
        std::vector<int> phi(E);
        std::vector<char> seen(E);
        do {
            std::vector<int> aimg(E);
            std::iota(aimg.begin(), aimg.end(), 0);
            do {
                for (int x = 0; x < E; ++x) phi[simg[aimg[x]]] = x;
                bool fixed_point = false;
                int cycles = 0;
                std::fill(seen.begin(), seen.end(), 0);
                for (int i = 0; i < E && !fixed_point; ++i) {
                    if (seen[i]) continue;
                    ++cycles;
                    int len = 0, j = i;
                    do {
                        seen[j] = 1;
                        j = phi[j];
                        ++len;
                    } while (j != i);
                    if (len == 1) fixed_point = true;
                }
                if (fixed_point) continue;
                if (!pair_transitive(simg, aimg, parent)) continue;
                int cs = 0, ca = 0;
                std::fill(seen.begin(), seen.end(), 0);
                for (int i = 0; i < E; ++i) {
                    if (seen[i]) continue;
                    ++cs;
                    for (int j = i; !seen[j]; j = simg[j]) seen[j] = 1;
                }
                std::fill(seen.begin(), seen.end(), 0);
                for (int i = 0; i < E; ++i) {
                    if (seen[i]) continue;
                    ++ca;
                    for (int j = i; !seen[j]; j = aimg[j]) seen[j] = 1;
                }
                if ((E - cycles + cs + ca) / 2 - 1 != g) continue;
                Hypermap h{E, Perm::from_images(simg), Perm::from_images(aimg),
                           Perm::from_images(phi)};
                classes.try_emplace(hypermap_class_key(h), std::move(h));
            } while (std::next_permutation(aimg.begin(), aimg.end()));
        } while (std::next_permutation(simg.begin(), simg.end()));
    }
    std::vector<Hypermap> out;
    out.reserve(classes.size());
    for (auto& [k, h] : classes) out.push_back(std::move(h));
    return out;
}

}  // namespace minsep
