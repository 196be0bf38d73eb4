#include "weylverify/batch.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

std::set<int> parse_families(const std::string& s) {
    std::set<int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t end = s.find(',', pos);
        if (end == std::string::npos) end = s.size();
        std::string tok = s.substr(pos, end - pos);
        std::size_t dash = tok.find('-');
        if (dash != std::string::npos && dash > 0) {
            int a = std::stoi(tok.substr(0, dash)), b = std::stoi(tok.substr(dash + 1));
            for (int f = a; f <= b; ++f) out.insert(f);
        } else {
            out.insert(std::stoi(tok));
        }
        pos = end + 1;
    }
    return out;
}

std::pair<long, long> parse_range(const std::string& s) {
    std::size_t colon = s.find(':', 1);
    if (colon == std::string::npos) throw std::invalid_argument("range must look like LO:HI");
    return {std::stol(s.substr(0, colon)), std::stol(s.substr(colon + 1))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Batch verification of tangent-space weight sets for type A spherical modules"};
    std::string families = "1-8", torus_range = "-3:3", format = "table", out_path;
    int max_size = 6, box = 2;
    int jobs = 0;
    app.add_option("--families", families, "families to run, e.g. 1,2,5 or 1-8");
    app.add_option("--max-size", max_size, "upper bound on m and n");
    app.add_option("--torus-range", torus_range, "LO:HI range for the torus parameters a and b");
    app.add_option("--format", format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--jobs", jobs, "worker threads (default: WEYLVERIFY_JOBS or 1)");
    app.add_option("--box", box, "coefficient bound for the brute-force saturation check");
    app.add_option("--out", out_path, "write the report here instead of stdout");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    wv::RunConfig cfg;
    try {
        cfg.families = parse_families(families);
        auto [lo, hi] = parse_range(torus_range);
        cfg.torus_lo = lo;
        cfg.torus_hi = hi;
        cfg.max_size = max_size;
        cfg.box = box;
        cfg.format = *wv::parse_format(format);
        if (jobs == 0) {
            const char* env = std::getenv("WEYLVERIFY_JOBS");
            jobs = env ? std::stoi(env) : 1;
        }
        cfg.jobs = jobs;
        wv::validate(cfg);
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    }

    auto records = wv::run_batch(cfg);
    std::string text = wv::emit(records, cfg.format);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        f << text;
    }
    return wv::exit_code(records);
}
