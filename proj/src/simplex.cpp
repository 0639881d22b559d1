#include "homcat/simplex.hpp"

#include <algorithm>
#include <sstream>

namespace homcat {

MonotoneMap::MonotoneMap(SimplexObject src, SimplexObject dst, std::vector<int> img)
    : source(src), target(dst), image(std::move(img)) {
    if (source.n < 0 || target.n < 0)
        throw err_index_out_of_range("simplex objects must be non-negative");
    if (static_cast<int>(image.size()) != source.n + 1)
        throw err_mismatch("image tuple length must be source.n + 1");
    for (size_t j = 0; j < image.size(); ++j) {
        if (image[j] < 0 || image[j] > target.n)
            throw err_index_out_of_range("image entry outside target range");
        if (j > 0 && image[j] < image[j - 1])
            throw err_mismatch("image tuple is not weakly increasing");
    }
}

bool MonotoneMap::is_identity() const {
    if (source.n != target.n) return false;
    for (int j = 0; j <= source.n; ++j)
        if (image[static_cast<size_t>(j)] != j) return false;
    return true;
}

bool MonotoneMap::is_injective() const {
    for (size_t j = 1; j < image.size(); ++j)
        if (image[j] == image[j - 1]) return false;
    return true;
}

bool MonotoneMap::is_surjective() const {
    std::vector<bool> hit(static_cast<size_t>(target.n) + 1, false);
    for (int v : image) hit[static_cast<size_t>(v)] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::string MonotoneMap::str() const {
    std::ostringstream os;
    os << "[" << source.n << "]->[" << target.n << "](";
    for (size_t j = 0; j < image.size(); ++j) {
        if (j) os << ",";
        os << image[j];
    }
    os << ")";
    return os.str();
}

MonotoneMap simplex_identity(int n) {
    std::vector<int> img(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) img[static_cast<size_t>(j)] = j;
    return {{n}, {n}, std::move(img)};
}

MonotoneMap face_map(int n, int i) {
    if (n < 1) throw err_index_out_of_range("face_map requires n >= 1");
    if (i < 0 || i > n) throw err_index_out_of_range("face index must satisfy 0 <= i <= n");
    std::vector<int> img(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) img[static_cast<size_t>(j)] = (j < i) ? j : j + 1;
    return {{n - 1}, {n}, std::move(img)};
}

MonotoneMap degeneracy_map(int n, int i) {
    if (n < 0) throw err_index_out_of_range("degeneracy_map requires n >= 0");
    if (i < 0 || i > n) throw err_index_out_of_range("degeneracy index must satisfy 0 <= i <= n");
    std::vector<int> img(static_cast<size_t>(n) + 2);
    for (int j = 0; j <= n + 1; ++j) img[static_cast<size_t>(j)] = (j <= i) ? j : j - 1;
    return {{n + 1}, {n}, std::move(img)};
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
    if (f.target != g.source)
        throw err_mismatch("compose: target of " + f.str() + " differs from source of " + g.str());
    std::vector<int> img(f.image.size());
    for (size_t j = 0; j < f.image.size(); ++j)
        img[j] = g.image[static_cast<size_t>(f.image[j])];
    return {f.source, g.target, std::move(img)};
}

std::vector<MonotoneMap> all_monotone_maps(int m, int n) {
    std::vector<MonotoneMap> out;
    if (m < 0 || n < 0) return out;
    std::vector<int> img(static_cast<size_t>(m) + 1, 0);
    while (true) {
        out.emplace_back(SimplexObject{m}, SimplexObject{n}, img);
        // next weakly increasing tuple in lexicographic order
        int j = m;
        while (j >= 0 && img[static_cast<size_t>(j)] == n) --j;
        if (j < 0) break;
        int v = img[static_cast<size_t>(j)] + 1;
        for (int t = j; t <= m; ++t) img[static_cast<size_t>(t)] = v;
    }
    return out;
}

std::int64_t monotone_count(int m, int n) {
    // number of weakly increasing tuples of length m+1 with values in {0..n}
    if (m < 0) return 1;  // the empty tuple
    if (n < 0) return 0;
    // C(m+n+1, m+1)
    std::int64_t num = 1;
    for (int t = 1; t <= m + 1; ++t) num = num * (n + t) / t;
    return num;
}

std::int64_t monotone_rank(const MonotoneMap& f) {
    // count maps lexicographically smaller than f
    const int m = f.source.n;
    const int n = f.target.n;
    std::int64_t rank = 0;
    int lower = 0;
    for (int j = 0; j <= m; ++j) {
        for (int v = lower; v < f(j); ++v) {
            // tuples agreeing up to j-1, with entry v at j, arbitrary tail >= v
            rank += monotone_count(m - j - 1, n - v);
        }
        lower = f(j);
    }
    return rank;
}

MonotoneMap monotone_unrank(int m, int n, std::int64_t rank) {
    std::vector<int> img(static_cast<size_t>(m) + 1, 0);
    int lower = 0;
    for (int j = 0; j <= m; ++j) {
        int v = lower;
        while (true) {
            std::int64_t block = monotone_count(m - j - 1, n - v);
            if (rank < block) break;
            rank -= block;
            ++v;
        }
        img[static_cast<size_t>(j)] = v;
        lower = v;
    }
    return {{m}, {n}, std::move(img)};
}

namespace {

std::string violation(const std::string& id, int n, int i, int j,
                      const MonotoneMap& lhs, const MonotoneMap& rhs) {
    std::ostringstream os;
    os << id << " at n=" << n << " i=" << i << " j=" << j << ": " << lhs.str()
       << " != " << rhs.str();
    return os.str();
}

}  // namespace

IdentityReport verify_simplicial_identities(int n_max) {
    return verify_simplicial_identities(n_max, GeneratorTable{});
}

IdentityReport verify_simplicial_identities(int n_max, const GeneratorTable& gen) {
    IdentityReport rep;
    auto fail = [&](std::string w) {
        rep.pass = false;
        rep.witness = std::move(w);
    };

    // (i) face-face: d_{n+1,j} d_{n,i} = d_{n+1,i} d_{n,j-1},  0 <= i < j <= n+1
    for (int n = 1; n + 1 <= n_max; ++n)
        for (int j = 1; j <= n + 1; ++j)
            for (int i = 0; i < j; ++i) {
                auto lhs = compose(gen.face(n + 1, j), gen.face(n, i));
                auto rhs = compose(gen.face(n + 1, i), gen.face(n, j - 1));
                if (lhs != rhs) return fail(violation("face-face", n, i, j, lhs, rhs)), rep;
            }

    // (ii) degeneracy-degeneracy: s_{n,j} s_{n+1,i} = s_{n,i} s_{n+1,j+1},  0 <= i <= j <= n
    for (int n = 0; n + 2 <= n_max; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i) {
                auto lhs = compose(gen.degeneracy(n, j), gen.degeneracy(n + 1, i));
                auto rhs = compose(gen.degeneracy(n, i), gen.degeneracy(n + 1, j + 1));
                if (lhs != rhs) return fail(violation("deg-deg", n, i, j, lhs, rhs)), rep;
            }

    // (iii)-(v) mixed: s_{n,j} d_{n+1,i}
    for (int n = 0; n + 1 <= n_max; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                auto lhs = compose(gen.degeneracy(n, j), gen.face(n + 1, i));
                if (i == j || i == j + 1) {
                    if (!lhs.is_identity())
                        return fail(violation("deg-face identity case", n, i, j, lhs,
                                              simplex_identity(n))), rep;
                } else if (i < j) {
                    auto rhs = compose(gen.face(n, i), gen.degeneracy(n - 1, j - 1));
                    if (lhs != rhs) return fail(violation("deg-face i<j", n, i, j, lhs, rhs)), rep;
                } else {  // i > j + 1
                    auto rhs = compose(gen.face(n, i - 1), gen.degeneracy(n - 1, j));
                    if (lhs != rhs) return fail(violation("deg-face i>j+1", n, i, j, lhs, rhs)), rep;
                }
            }

    return rep;
}

EpiMonoFactorization epi_mono_factorize(const MonotoneMap& f) {
    EpiMonoFactorization fac;
    for (int j = 0; j < f.source.n; ++j)
        if (f(j) == f(j + 1)) fac.degeneracy_indices.push_back(j);
    std::vector<bool> hit(static_cast<size_t>(f.target.n) + 1, false);
    for (int v : f.image) hit[static_cast<size_t>(v)] = true;
    for (int v = f.target.n; v >= 0; --v)
        if (!hit[static_cast<size_t>(v)]) fac.face_indices.push_back(v);
    return fac;
}

MonotoneMap recompose(int source_n, int target_n, const EpiMonoFactorization& fac) {
    MonotoneMap cur = simplex_identity(source_n);
    // degeneracies applied innermost-largest first
    for (auto it = fac.degeneracy_indices.rbegin(); it != fac.degeneracy_indices.rend(); ++it)
        cur = compose(degeneracy_map(cur.target.n - 1, *it), cur);
    // faces applied innermost-smallest first
    for (auto it = fac.face_indices.rbegin(); it != fac.face_indices.rend(); ++it)
        cur = compose(face_map(cur.target.n + 1, *it), cur);
    if (cur.target.n != target_n)
        throw err_mismatch("recompose: factorization does not reach the stated target");
    return cur;
}

}  // namespace homcat
