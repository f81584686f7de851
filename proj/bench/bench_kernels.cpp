// Serial against OpenMP for the kernels that parallelize: axiom checks over
// basis pairs, associator submodule spans and homology per multidegree, the
// Groebner pair batches, and the symmetric algebra checks.
#include <benchmark/benchmark.h>

#include "mdg/io.hpp"
#include "mdg/symdg.hpp"

using namespace mdg;

namespace {

const Document& doc(const std::string& name) {
    static std::map<std::string, Document> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, parse_file(std::string(MDG_FIXTURE_DIR) + "/" + name)).first;
    return it->second;
}

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) ? "openmp" : "serial"); }

void BM_Axioms(benchmark::State& s) {
    const MDGAlgebra& A = doc("fm.mdg").algebra();
    for (auto _ : s) benchmark::DoNotOptimize(check_mdg_axioms(A, mode(s)).ok());
    label(s);
}

void BM_Submodule(benchmark::State& s) {
    const MDGAlgebra& A = doc("fk.mdg").algebra();
    for (auto _ : s) benchmark::DoNotOptimize(associator_submodule(A, mode(s)).generators().size());
    label(s);
}

void BM_Homology(benchmark::State& s) {
    const MDGAlgebra& A = doc("fm.mdg").algebra();
    AssociatorSubmodule V = associator_submodule(A);
    for (auto _ : s) benchmark::DoNotOptimize(associator_homology(V, mode(s)).total.size());
    label(s);
}

void BM_Buchberger(benchmark::State& s) {
    const MDGAlgebra& A = doc("ex55.mdg").algebra("mu");
    BuchbergerOptions opt;
    opt.exec = mode(s);
    for (auto _ : s) benchmark::DoNotOptimize(associativity_certificate(A, opt).associative);
    label(s);
}

void BM_SymCheck(benchmark::State& s) {
    SymDGAlgebra S(doc("fk.mdg").algebra().complex_ptr(), 3);
    for (auto _ : s) benchmark::DoNotOptimize(check_sym(S, mode(s)).ok());
    label(s);
}

}  // namespace

BENCHMARK(BM_Axioms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Submodule)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Homology)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Buchberger)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymCheck)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
