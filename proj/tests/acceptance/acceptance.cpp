// Prints one pass/fail line per acceptance criterion. Usage: acceptance [seed] [claim-id]

#include "arlab/cli/claims.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    arlab::cli::ClaimContext ctx;
    if (argc > 1) ctx.seed = std::strtoull(argv[1], nullptr, 10);
    const std::string only = argc > 2 ? argv[2] : "";
    int failed = 0;
    for (const auto& claim : arlab::cli::registry()) {
        if (!only.empty() && claim.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        std::vector<arlab::cli::ResultRecord> records;
        std::string error;
        try {
            records = claim.run(ctx);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = error.empty() && arlab::cli::all_pass(records);
        failed += !pass;
        std::cout << "criterion " << claim.criterion << " [" << claim.id << "]: " << (pass ? "PASS" : "FAIL") << " ("
                  << records.size() << " records, " << arlab::cli::format_number(std::round(secs * 100) / 100)
                  << " s) " << claim.summary << '\n';
        if (!error.empty()) std::cout << "    error: " << error << '\n';
        for (const auto& r : records)
            if (!r.pass)
                std::cout << "    " << r.metric << " = " << arlab::cli::format_number(r.value) << " outside ["
                          << arlab::cli::format_number(r.lo) << ", " << arlab::cli::format_number(r.hi) << "]\n";
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << '\n';
    return failed ? 1 : 0;
}
