#include "idea/archive.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace idea {

std::string to_string(MinimumOrigin o) {
    switch (o) {
    case MinimumOrigin::idea_contraction: return "idea_contraction";
    case MinimumOrigin::mbh_sample: return "mbh_sample";
    case MinimumOrigin::harvest: return "harvest";
    }
    return "harvest";
}

MinimumOrigin origin_from_string(const std::string& s) {
    if (s == "idea_contraction") return MinimumOrigin::idea_contraction;
    if (s == "mbh_sample") return MinimumOrigin::mbh_sample;
    if (s == "harvest") return MinimumOrigin::harvest;
    throw std::invalid_argument("unknown minimum origin: " + s);
}

static std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_trace_csv(const std::string& path, const RunReport& report) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "generation,best_f,rho_a,evaluations\n";
    for (const auto& t : report.trace)
        out << t.generation << ',' << fmt_double(t.best_f) << ',' << fmt_double(t.rho_a) << ','
            << t.evaluations << '\n';
}

void write_archive_jsonl(const std::string& path, const Archive& archive) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    for (const auto& r : archive.records) {
        nlohmann::json line;
        line["x"] = r.x;
        if (std::isfinite(r.f))
            line["f"] = r.f;
        else
            line["f"] = nullptr;
        line["evaluations_used"] = r.evaluations_used;
        line["found_at"] = r.found_at;
        line["origin"] = to_string(r.origin);
        line["degenerate"] = r.degenerate;
        out << line.dump() << '\n';
    }
}

Archive read_archive_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Archive archive;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const nlohmann::json j = nlohmann::json::parse(line);
        MinimumRecord r;
        r.x = j.at("x").get<std::vector<double>>();
        if (j.at("f").is_null())
            r.f = std::numeric_limits<double>::quiet_NaN();
        else
            r.f = j.at("f").get<double>();
        r.evaluations_used = j.at("evaluations_used").get<long>();
        r.found_at = j.at("found_at").get<long>();
        r.origin = origin_from_string(j.at("origin").get<std::string>());
        r.degenerate = j.value("degenerate", false);
        archive.add(std::move(r));
    }
    return archive;
}

} // namespace idea
