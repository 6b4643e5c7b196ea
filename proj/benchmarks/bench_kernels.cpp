// Compares the OpenMP kernels against their serial reference
// implementations on the brute-force sweeps.

#include <chrono>
#include <cstdio>

#include "tanglekit/sweeps.hpp"

using namespace tk;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void bench_cut_condition() {
    auto graphs = all_connected_multigraphs(4, 7);
    for (int i = 0; i < 200; ++i)
        graphs.push_back(random_connected_multigraph(77 + i, 5, 5, 10));

    auto t0 = Clock::now();
    std::size_t hits_serial = 0;
    for (const Multigraph& g : graphs)
        for (int k = 1; k <= 3; ++k)
            if (cut_condition_serial(g, k)) ++hits_serial;
    double serial = seconds_since(t0);

    t0 = Clock::now();
    std::size_t hits_par = 0;
    for (const Multigraph& g : graphs)
        for (int k = 1; k <= 3; ++k)
            if (cut_condition(g, k)) ++hits_par;
    double par = seconds_since(t0);

    std::printf("cut_condition   %7zu graphs  serial %.3fs  parallel %.3fs  (%s)\n",
                graphs.size(), serial, par,
                hits_serial == hits_par ? "match" : "MISMATCH");
}

void bench_tangles() {
    auto graphs = all_simple_graphs(4);

    auto t0 = Clock::now();
    std::size_t count_serial = 0;
    for (const Multigraph& g : graphs)
        for (int k = 1; k <= 3; ++k)
            count_serial += enumerate_tangles_finite_serial(g, k).size();
    double serial = seconds_since(t0);

    t0 = Clock::now();
    std::size_t count_par = 0;
    for (const Multigraph& g : graphs)
        for (int k = 1; k <= 3; ++k)
            count_par += enumerate_tangles_finite(g, k).size();
    double par = seconds_since(t0);

    std::printf("tangles         %7zu graphs  serial %.3fs  parallel %.3fs  (%s)\n",
                graphs.size(), serial, par,
                count_serial == count_par ? "match" : "MISMATCH");
}

void bench_crit_sweep() {
    auto p = make_presentation("crit_chain");
    auto t0 = Clock::now();
    auto found = enumerate_crit(*p, 6, 20, 10);
    double par = seconds_since(t0);
    std::printf("enumerate_crit  crit_chain@20      parallel %.3fs  (%zu sets)\n", par,
                found.size());
}

}  // namespace

int main() {
    bench_cut_condition();
    bench_tangles();
    bench_crit_sweep();
    return 0;
}
