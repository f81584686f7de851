#include <exception>
#include <mutex>

#include "mdg/complex.hpp"

#ifdef MDG_HAVE_OPENMP
#include <omp.h>
#endif

namespace mdg {

int max_threads() {
#ifdef MDG_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void parallel_for(std::size_t n, Exec exec, const std::function<void(std::size_t)>& f) {
#ifdef MDG_HAVE_OPENMP
    if (exec == Exec::Parallel && n > 1) {
        std::exception_ptr err;
        std::mutex mu;
        long nn = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < nn; ++i) {
            try {
                f(static_cast<std::size_t>(i));
            } catch (...) {
                std::lock_guard<std::mutex> lk(mu);
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) f(i);
}

namespace {

using DegreeDims = std::map<int, long>;

HomologyResult merge(const std::vector<Multidegree>& box, const std::vector<DegreeDims>& local) {
    HomologyResult out;
    for (std::size_t i = 0; i < box.size(); ++i) {
        for (const auto& [k, h] : local[i]) {
            if (h == 0) continue;
            out.total[k] += h;
            out.per_mdeg[box[i]][k] = h;
        }
    }
    for (const auto& [k, h] : out.total) {
        if (h == 0) continue;
        if (!out.inf || k < *out.inf) out.inf = k;
        if (!out.sup || k > *out.sup) out.sup = k;
    }
    return out;
}

}  // namespace

HomologyResult subcomplex_homology(const FreeComplex& F, const std::vector<Multidegree>& box, const PieceFn& pieces,
                                   Exec exec) {
    F.scalar_d();  // fill the cache before threads read it
    int top = F.max_degree();
    std::vector<DegreeDims> local(box.size());
    parallel_for(box.size(), exec, [&](std::size_t bi) {
        PieceSpaces V = pieces(box[bi]);
        std::vector<long> dim(top + 2, 0), rk(top + 2, 0);
        for (int k = 0; k <= top; ++k) {
            auto it = V.find(k);
            if (it == V.end()) continue;
            dim[k] = static_cast<long>(it->second.rank());
            if (k > 0) rk[k] = static_cast<long>(image_under_d(F, it->second).rank());
        }
        for (int k = 0; k <= top; ++k) {
            long h = dim[k] - rk[k] - rk[k + 1];
            if (h < 0) throw MathError("negative homology: the pieces are not a subcomplex");
            if (h) local[bi][k] = h;
        }
    });
    return merge(box, local);
}

HomologyResult quotient_homology(const FreeComplex& F, const std::vector<Multidegree>& box, const PieceFn& pieces,
                                 Exec exec) {
    F.scalar_d();  // fill the cache before threads read it
    int top = F.max_degree();
    std::vector<DegreeDims> local(box.size());
    parallel_for(box.size(), exec, [&](std::size_t bi) {
        const Multidegree& b = box[bi];
        PieceSpaces V = pieces(b);
        std::vector<long> qdim(top + 2, 0), rk(top + 2, 0);
        std::vector<EchelonBasis> Vk(top + 1, EchelonBasis(F.size()));
        for (int k = 0; k <= top; ++k) {
            auto it = V.find(k);
            if (it != V.end()) Vk[k] = it->second;
        }
        for (int k = 0; k <= top; ++k) {
            EchelonBasis full = full_piece(F, k, b);
            qdim[k] = static_cast<long>(full.rank()) - static_cast<long>(Vk[k].rank());
            if (k > 0) {
                EchelonBasis img = span_sum(image_under_d(F, full), Vk[k - 1]);
                rk[k] = static_cast<long>(img.rank()) - static_cast<long>(Vk[k - 1].rank());
            }
        }
        for (int k = 0; k <= top; ++k) {
            long h = qdim[k] - rk[k] - rk[k + 1];
            if (h < 0) throw MathError("negative quotient homology: the pieces are not a subcomplex");
            if (h) local[bi][k] = h;
        }
    });
    return merge(box, local);
}

HomologyResult homology_dims(const FreeComplex& F, Exec exec) {
    if (!F.is_multigraded())
        throw StructureError("homology over the field needs a multigraded complex; use graded_piece at a chosen "
                             "multidegree or supply multidegree labels");
    int top = F.max_degree();
    PieceFn full = [&](const Multidegree& b) {
        PieceSpaces P;
        for (int k = 0; k <= top; ++k) P[k] = full_piece(F, k, b);
        return P;
    };
    return subcomplex_homology(F, divisors_of(F.lcm_all()), full, exec);
}

std::map<int, long> piece_dims(const std::vector<Multidegree>& box, const PieceFn& pieces, Exec exec) {
    std::vector<DegreeDims> local(box.size());
    parallel_for(box.size(), exec, [&](std::size_t bi) {
        for (const auto& [k, E] : pieces(box[bi]))
            if (E.rank()) local[bi][k] = static_cast<long>(E.rank());
    });
    std::map<int, long> out;
    for (const auto& l : local)
        for (const auto& [k, v] : l) out[k] += v;
    return out;
}

FreeComplex wedge_sum(const FreeComplex& A, const FreeComplex& B, const std::string& name) {
    if (A.ring() != B.ring()) throw RingMismatch("wedge sum of complexes over different rings");
    FreeComplex W(name, A.ring());
    std::vector<int> mapA(A.size(), 0), mapB(B.size(), 0);
    int top = std::max(A.max_degree(), B.max_degree());
    auto label = [](const FreeComplex& C, int i) -> std::optional<Multidegree> {
        if (!C.has_mdeg_labels()) return std::nullopt;
        return C.mdeg(i);
    };
    for (int k = 1; k <= top; ++k) {
        for (int i : A.indices_in_degree(k)) mapA[i] = W.add_basis(A.basis(i).name, k, label(A, i));
        for (int i : B.indices_in_degree(k)) {
            std::string nm = B.basis(i).name;
            if (W.index_of(nm) >= 0) nm += "'";
            mapB[i] = W.add_basis(nm, k, label(B, i));
        }
    }
    for (std::size_t i = 1; i < A.size(); ++i) {
        Element v;
        for (const auto& [j, c] : A.d(static_cast<int>(i)).entries()) v.add_term(mapA[j], c);
        W.set_d(mapA[i], v);
    }
    for (std::size_t i = 1; i < B.size(); ++i) {
        Element v;
        bool into_unit = B.degree(static_cast<int>(i)) == 1;
        for (const auto& [j, c] : B.d(static_cast<int>(i)).entries()) v.add_term(mapB[j], into_unit ? -c : c);
        W.set_d(mapB[i], v);
    }
    return W;
}

}  // namespace mdg
