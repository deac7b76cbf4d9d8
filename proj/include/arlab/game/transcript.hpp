#pragma once

// JSON-lines transcripts: a header object followed by one object per round.
// Strings are written in run-length form ("0^12 1 0^3", "eps" when empty).

#include "arlab/game/protocol.hpp"

#include "json.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace arlab::game {

inline TokenString parse_compact(const std::string& text) {
    TokenString out;
    if (text == "eps") return out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok.empty() || (tok[0] != '0' && tok[0] != '1')) throw std::invalid_argument("bad run '" + tok + "'");
        const Bit b = static_cast<Bit>(tok[0] - '0');
        std::uint64_t n = 1;
        if (tok.size() > 1) {
            if (tok[1] != '^' || tok.size() < 3) throw std::invalid_argument("bad run '" + tok + "'");
            n = std::stoull(tok.substr(2));
        }
        out.append_run(b, n);
    }
    return out;
}

inline void write_jsonl(std::ostream& os, const GameTranscript& tr) {
    nlohmann::json header = {{"type", "header"},     {"M", tr.M},         {"mode", to_string(tr.mode)},
                             {"learner", tr.learner}, {"stream", tr.stream}, {"seed", tr.seed},
                             {"rounds", tr.rounds.size()}, {"mistakes", tr.mistakes()}};
    header["config"] = tr.config.empty() ? nlohmann::json::object() : nlohmann::json::parse(tr.config);
    os << header.dump() << '\n';
    for (std::size_t t = 0; t < tr.rounds.size(); ++t) {
        const Round& r = tr.rounds[t];
        nlohmann::json row = {{"type", "round"},
                              {"t", t + 1},
                              {"instance", r.instance.to_compact()},
                              {"prediction", static_cast<int>(r.prediction)},
                              {"feedback", r.feedback.to_compact()},
                              {"mistake", r.mistake}};
        os << row.dump() << '\n';
    }
}

inline GameTranscript read_jsonl(std::istream& is) {
    GameTranscript tr;
    std::string line;
    bool have_header = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto j = nlohmann::json::parse(line);
        if (j.at("type") == "header") {
            tr.M = j.at("M");
            tr.mode = parse_mode(j.at("mode"));
            tr.learner = j.value("learner", "");
            tr.stream = j.value("stream", "");
            tr.seed = j.value("seed", std::uint64_t{0});
            tr.config = j.contains("config") ? j["config"].dump() : "";
            have_header = true;
        } else {
            if (!have_header) throw std::invalid_argument("transcript: round before header");
            Round r;
            r.instance = parse_compact(j.at("instance"));
            r.prediction = static_cast<Bit>(j.at("prediction").get<int>());
            r.feedback = parse_compact(j.at("feedback"));
            r.mistake = j.at("mistake");
            tr.rounds.push_back(std::move(r));
        }
    }
    if (!have_header) throw std::invalid_argument("transcript: missing header");
    return tr;
}

}  // namespace arlab::game
