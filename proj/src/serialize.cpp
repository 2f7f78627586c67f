#include "mbnim/serialize.hpp"

#include <fstream>
#include <sstream>

namespace mbnim {

namespace {

Natural parse_natural(const std::string& tok, std::size_t at, const std::string& whole) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("expected a natural number at position " + std::to_string(at) +
                         " in '" + whole + "'");
    return std::stoull(tok);
}

std::vector<Natural> parse_csv(const std::string& text) {
    std::vector<Natural> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        auto tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        out.push_back(parse_natural(tok, pos, text));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// "{(1,2),(3,4)}" -> set of positions.
std::set<Position> parse_move_set(const std::string& text, std::size_t at) {
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw ParseError("expected '{(..),(..)}' at position " + std::to_string(at) +
                         " in system adjustment '" + text + "'");
    std::set<Position> out;
    std::size_t pos = 1;
    while (pos < text.size() - 1) {
        if (text[pos] == ',') {
            ++pos;
            continue;
        }
        if (text[pos] != '(')
            throw ParseError("expected '(' at position " + std::to_string(at + pos) +
                             " in '" + text + "'");
        auto close = text.find(')', pos);
        if (close == std::string::npos)
            throw ParseError("unclosed '(' at position " + std::to_string(at + pos) +
                             " in '" + text + "'");
        out.insert(parse_csv(text.substr(pos + 1, close - pos - 1)));
        pos = close + 1;
    }
    return out;
}

nlohmann::json position_to_json(const Position& x) { return nlohmann::json(x); }

}  // namespace

Position parse_position(const std::string& text) { return parse_csv(text); }

Box parse_box(const std::string& text) {
    Box box{parse_csv(text)};
    for (Natural b : box.bounds)
        if (b == 0) throw ParseError("box bounds must be positive in '" + text + "'");
    return box;
}

MoveSystem parse_system(const std::string& text) {
    // Split off +{...} / -{...} suffixes.
    std::size_t cut = text.size();
    std::size_t plus_at = std::string::npos, minus_at = std::string::npos;
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '{') ++depth;
        if (text[i] == '}') --depth;
        bool opens_set = i + 1 < text.size() && text[i + 1] == '{';
        if (depth == 0 && opens_set && text[i] == '+' && plus_at == std::string::npos) {
            plus_at = i;
            cut = std::min(cut, i);
        }
        if (depth == 0 && opens_set && text[i] == '-' && minus_at == std::string::npos) {
            minus_at = i;
            cut = std::min(cut, i);
        }
    }
    std::string head = text.substr(0, cut);

    MoveSystem system;
    if (head == "ord") system = MoveSystem::ord();
    else if (head == "nmin") system = MoveSystem::nmin();
    else if (head == "max") system = MoveSystem::max();
    else if (head == "wt1") system = MoveSystem::weight_one();
    else if (head.starts_with("explicit@")) {
        std::string file = head.substr(9);
        std::ifstream in(file);
        if (!in) throw ParseError("cannot open explicit move file '" + file + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("bad JSON in '" + file + "': " + e.what());
        }
        std::set<Position> moves;
        for (const auto& row : j) moves.insert(row.get<Position>());
        system = MoveSystem::explicit_moves(std::move(moves));
    } else {
        throw ParseError("unknown system '" + head +
                         "' (expected ord|nmin|max|wt1|explicit@FILE)");
    }

    auto adjustment = [&](std::size_t at) {
        std::size_t end = text.size();
        for (std::size_t other : {plus_at, minus_at})
            if (other != std::string::npos && other > at) end = std::min(end, other);
        return parse_move_set(text.substr(at + 1, end - at - 1), at + 1);
    };
    if (plus_at != std::string::npos) system.plus = adjustment(plus_at);
    if (minus_at != std::string::npos) system.minus = adjustment(minus_at);
    return system;
}

nlohmann::json sg_table_to_json(const MixedBase& base, const SGTable& table) {
    return {{"base", base.to_string()},
            {"box", table.box.bounds},
            {"values", table.values}};
}

std::string sg_table_to_tsv(const SGTable& table) {
    if (table.box.dims() != 2)
        throw PreconditionError("TSV output is defined for m = 2 only");
    std::ostringstream out;
    for (Natural x0 = 0; x0 < table.box.bounds[0]; ++x0) {
        for (Natural x1 = 0; x1 < table.box.bounds[1]; ++x1) {
            if (x1) out << '\t';
            out << table.at({x0, x1});
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::json verify_report_to_json(const VerifyReport& report) {
    switch (report.outcome) {
        case VerifyReport::Outcome::Ok:
            return {{"outcome", "ok"}};
        case VerifyReport::Outcome::SG1Violation:
            return {{"outcome", "sg1_violation"},
                    {"x", position_to_json(report.x)},
                    {"move", position_to_json(report.move)}};
        case VerifyReport::Outcome::SG2Violation:
            return {{"outcome", "sg2_violation"},
                    {"x", position_to_json(report.x)},
                    {"h", report.h}};
    }
    return {};
}

nlohmann::json audit_report_to_json(const AuditReport& report) {
    nlohmann::json necessary = nlohmann::json::array();
    for (const auto& entry : report.necessary)
        necessary.push_back({{"move", position_to_json(entry.move)},
                             {"witness_x", position_to_json(entry.witness_x)},
                             {"h", entry.h}});
    nlohmann::json undetermined = nlohmann::json::array();
    for (const auto& c : report.undetermined) undetermined.push_back(position_to_json(c));
    return {{"necessary", necessary}, {"undetermined", undetermined}};
}

nlohmann::json nj_info_to_json(const NjInfo& info) {
    switch (info.form) {
        case NjInfo::Form::Empty:
            return {{"form", "empty"}};
        case NjInfo::Form::WeightOne:
            return {{"form", "weight_one"},
                    {"min_level", info.level},
                    {"pivot", *info.pivots.begin()}};
        case NjInfo::Form::FixedN:
            return {{"form", "fixed_level"},
                    {"level", info.level},
                    {"pivots", std::vector<std::size_t>(info.pivots.begin(), info.pivots.end())}};
    }
    return {};
}

}  // namespace mbnim
