// Wall-clock comparison of the serial reference path against the OpenMP path
// on the three data-parallel sweeps.

#include "cmvar/catalogue.hpp"
#include "cmvar/groebner.hpp"
#include "cmvar/parallel.hpp"
#include "cmvar/presentation.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

using namespace cmvar;

namespace {

double time_ms(const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    body();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, const std::function<void(Exec)>& body) {
    double serial = time_ms([&] { body(Exec::serial); });
    double openmp = time_ms([&] { body(Exec::openmp); });
    std::printf("%-36s %10.1f ms %10.1f ms %8.2fx\n", name, serial, openmp, serial / openmp);
}

} // namespace

int main() {
    std::printf("%-36s %13s %13s %9s   (%d threads)\n", "sweep", "serial", "openmp", "speedup",
                thread_count(Exec::openmp));

    row("relation vanishing, 200 CM points", [](Exec exec) {
        Report r = verify_cm(4, 200, 7, exec);
        if (!r.all_pass()) std::printf("unexpected failure!\n");
    });

    row("gb check, 15-element catalogue", [](Exec exec) {
        GbCheckResult res = gb_check(cm4_groebner_catalogue(), default_order(), exec);
        if (!res.pass) std::printf("unexpected failure!\n");
    });

    row("bracket table, 91 pairs x 10 points", [](Exec exec) {
        Report r = verify_brackets(10, 7, exec);
        if (!r.all_pass()) std::printf("unexpected failure!\n");
    });

    row("Cayley-Hamilton, 2000 matrices", [](Exec exec) {
        Report r = identities_report(2000, 5, 7, exec);
        if (!r.all_pass()) std::printf("unexpected failure!\n");
    });

    return 0;
}
