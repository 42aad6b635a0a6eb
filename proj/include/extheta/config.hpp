#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "extheta/scalar.hpp"

namespace extheta {

// Runtime configuration.  Everything has a usable default; a key=value file
// and the EXTHETA_THREADS / EXTHETA_OUTDIR environment variables override.
struct Config {
    std::optional<std::string> e_matrix_path;
    Rational gamma_i{1};
    Rational gamma_e{0};
    long shell_bound = 10;   // max n(x) for shell-backed sweeps
    int qseries_len = 50;    // q-expansion precision
    std::string format = "json";  // json | csv
    unsigned threads = 1;
    std::string outdir = ".";

    static Config load(const std::optional<std::string>& path) {
        Config cfg;
        cfg.threads = std::max(1u, std::thread::hardware_concurrency());
        if (path) {
            std::ifstream in(*path);
            if (!in) throw std::invalid_argument("config: cannot open " + *path);
            std::string line;
            while (std::getline(in, line)) {
                auto hash = line.find('#');
                if (hash != std::string::npos) line.erase(hash);
                auto eq = line.find('=');
                if (eq == std::string::npos) continue;
                auto trim = [](std::string s) {
                    auto b = s.find_first_not_of(" \t\r");
                    auto e = s.find_last_not_of(" \t\r");
                    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
                };
                std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
                if (key.empty()) continue;
                if (key == "e_matrix_path")
                    cfg.e_matrix_path = val;
                else if (key == "gamma_i")
                    cfg.gamma_i = parse_rational(val);
                else if (key == "gamma_e")
                    cfg.gamma_e = parse_rational(val);
                else if (key == "shell_bound")
                    cfg.shell_bound = std::stol(val);
                else if (key == "qseries_len")
                    cfg.qseries_len = std::stoi(val);
                else if (key == "format")
                    cfg.format = val;
                else if (key == "threads")
                    cfg.threads = static_cast<unsigned>(std::stoul(val));
                else if (key == "outdir")
                    cfg.outdir = val;
                else
                    throw std::invalid_argument("config: unknown key " + key);
            }
        }
        if (const char* t = std::getenv("EXTHETA_THREADS")) cfg.threads = static_cast<unsigned>(std::stoul(t));
        if (const char* o = std::getenv("EXTHETA_OUTDIR")) cfg.outdir = o;
        if (cfg.threads == 0) cfg.threads = 1;
        return cfg;
    }
};

}  // namespace extheta
