// Times the parallel kernels against their serial reference implementations
// on fixed desk-scale workloads and prints one line per kernel.

#include <chrono>
#include <cstdio>

#include "tropcirc/bounds.hpp"
#include "tropcirc/generators.hpp"
#include "tropcirc/oracle.hpp"

namespace tc = tropcirc;
using clock_type = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(F&& fn) {
    auto t0 = clock_type::now();
    fn();
    auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double openmp_ms) {
    std::printf("%-28s serial %9.2f ms   openmp %9.2f ms   speedup %5.2fx\n", name, serial_ms,
                openmp_ms, openmp_ms > 0 ? serial_ms / openmp_ms : 0.0);
}

}  // namespace

int main() {
    // minimum producing-circuit size
    {
        tc::polynomial f(4);
        f.add_term(tc::monomial({{0, 1}, {2, 1}}), 1);
        f.add_term(tc::monomial({{0, 1}, {3, 1}}), 1);
        f.add_term(tc::monomial({{1, 1}, {2, 1}}), 1);
        f.add_term(tc::monomial({{1, 1}, {3, 1}}), 1);
        f.add_term(tc::monomial({{0, 1}, {1, 1}}), 1);
        double s = time_ms([&] { tc::oracle::min_produce_size(f, {6, tc::exec::serial}); });
        double p = time_ms([&] { tc::oracle::min_produce_size(f, {6, tc::exec::openmp}); });
        row("oracle produce-size", s, p);
    }
    // minimum computing-circuit size over min-plus
    {
        tc::polynomial f = tc::gen_stconn(4);
        tc::polynomial small(4);
        small.add_term(tc::monomial({{0, 1}, {1, 1}}), 1);
        small.add_term(tc::monomial({{2, 1}, {3, 1}}), 1);
        small.add_term(tc::monomial({{0, 1}, {2, 1}}), 1);
        double s = time_ms([&] {
            tc::oracle::min_compute_size(small, tc::semiring_id::min_nat,
                                         {4, tc::exec::serial});
        });
        double p = time_ms([&] {
            tc::oracle::min_compute_size(small, tc::semiring_id::min_nat,
                                         {4, tc::exec::openmp});
        });
        row("oracle compute-size", s, p);
    }
    // matching number over balanced partitions
    {
        tc::graph g = tc::random_graph(12, 0.4, 7);
        double s = time_ms([&] { tc::matching_number(g, tc::exec::serial); });
        double p = time_ms([&] { tc::matching_number(g, tc::exec::openmp); });
        row("matching number (n=12)", s, p);
    }
    // product-rectangle search over variable bipartitions
    {
        tc::graph g = tc::random_graph(9, 0.5, 11);
        tc::polynomial f = tc::gen_fG(g);
        double s = time_ms([&] { tc::max_balanced_rectangle(f, tc::exec::serial); });
        double p = time_ms([&] { tc::max_balanced_rectangle(f, tc::exec::openmp); });
        row("rectangle search (n=9)", s, p);
    }
    return 0;
}
