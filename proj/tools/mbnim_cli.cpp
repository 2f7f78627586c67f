// mbnim: take-away games whose Sprague-Grundy function is the Nim sum in a
// mixed base. One-shot subcommands over the library, machine-readable output.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mbnim/canonical_systems.hpp"
#include "mbnim/game_oracle.hpp"
#include "mbnim/maximum_system.hpp"
#include "mbnim/minimal_audit.hpp"
#include "mbnim/serialize.hpp"

using nlohmann::json;

namespace {

constexpr int kExitLosing = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOverflow = 3;

struct Options {
    std::string base = ":2";
    std::string output = "json";
};

void emit(const Options& opt, const json& j, const std::string& plain) {
    if (opt.output == "plain") std::cout << plain << "\n";
    else std::cout << j.dump() << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Exact solver for mixed-base Nim-sum take-away games"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--base", opt.base, "Mixed base as 'p0,p1,...:t' (constant base ':t')")
        ->capture_default_str();
    app.add_option("--output", opt.output, "Output format: json | tsv | plain")
        ->check(CLI::IsMember({"json", "tsv", "plain"}))
        ->capture_default_str();

    // digits
    auto* cmd_digits = app.add_subcommand("digits", "Convert between values and digit vectors");
    std::optional<mbnim::Natural> digits_value;
    std::string digits_from;
    cmd_digits->add_option("--value", digits_value, "Value to expand into digits");
    cmd_digits->add_option("--from-digits", digits_from,
                           "Little-endian digits d0,d1,... to assemble into a value");

    // nimsum
    auto* cmd_nimsum = app.add_subcommand("nimsum", "Nim sum of a position");
    std::string nimsum_pos;
    cmd_nimsum->add_option("--pos", nimsum_pos, "Position x0,x1,...")->required();

    // ord
    auto* cmd_ord = app.add_subcommand("ord", "beta-adic order of a value");
    mbnim::Natural ord_value = 0;
    cmd_ord->add_option("--value", ord_value, "Value")->required();

    // carry
    auto* cmd_carry = app.add_subcommand("carry", "Carry vector of an addition");
    cmd_carry->set_help_flag("--help", "Print help");  // frees -h for the addend
    mbnim::Natural carry_n = 0, carry_h = 0;
    cmd_carry->add_option("--n", carry_n)->required();
    cmd_carry->add_option("--h", carry_h)->required();

    // member
    auto* cmd_member = app.add_subcommand("member", "Move-system membership with certificate");
    std::string member_system, member_move;
    cmd_member->add_option("--system", member_system, "ord|nmin|max|wt1|explicit@FILE")
        ->required();
    cmd_member->add_option("--move", member_move, "Candidate move c0,c1,...")->required();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "Check (SG1)/(SG2) on a box");
    std::string verify_system_text, verify_box;
    cmd_verify->add_option("--system", verify_system_text)->required();
    cmd_verify->add_option("--box", verify_box, "Exclusive bounds b0,b1,...")->required();

    // sg-table
    auto* cmd_table = app.add_subcommand("sg-table", "Brute-force Sprague-Grundy table");
    std::string table_system = "ord", table_box, table_out;
    cmd_table->add_option("--system", table_system)->capture_default_str();
    cmd_table->add_option("--box", table_box)->required();
    cmd_table->add_option("--out", table_out, "Write to FILE instead of stdout");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "List system members within a box");
    std::string enum_system, enum_box;
    cmd_enum->add_option("--system", enum_system)->required();
    cmd_enum->add_option("--box", enum_box)->required();

    // best-move
    auto* cmd_best = app.add_subcommand("best-move", "Winning (or target-value) move");
    std::string best_pos;
    mbnim::Natural best_target = 0;
    cmd_best->add_option("--pos", best_pos)->required();
    cmd_best->add_option("--target", best_target, "Target Nim-sum value (default 0)")
        ->capture_default_str();

    // audit-minimal
    auto* cmd_audit = app.add_subcommand("audit-minimal", "Necessity witnesses on a box");
    std::string audit_system, audit_box;
    cmd_audit->add_option("--system", audit_system)->required();
    cmd_audit->add_option("--box", audit_box)->required();

    // props
    auto* cmd_props = app.add_subcommand("props", "Decidable theorem criteria");
    std::string props_check;
    std::size_t props_m = 2;
    cmd_props->add_option("--check", props_check, "min-system|min-symmetric|max-eq-ord")
        ->check(CLI::IsMember({"min-system", "min-symmetric", "max-eq-ord"}))
        ->required();
    cmd_props->add_option("-m,--heaps", props_m, "Number of heaps")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    mbnim::MixedBase base = mbnim::MixedBase::parse(opt.base);

    if (cmd_digits->parsed()) {
        if (digits_value && !digits_from.empty())
            throw mbnim::ParseError("give --value or --from-digits, not both");
        if (digits_value) {
            auto d = mbnim::to_digits(base, *digits_value);
            emit(opt, {{"value", *digits_value}, {"digits", d}}, mbnim::digits_to_string(d));
        } else if (!digits_from.empty()) {
            auto d = mbnim::parse_position(digits_from);
            auto v = mbnim::from_digits(base, d);
            emit(opt, {{"value", v}, {"digits", d}}, std::to_string(v));
        } else {
            throw mbnim::ParseError("digits needs --value or --from-digits");
        }
    } else if (cmd_nimsum->parsed()) {
        auto x = mbnim::parse_position(nimsum_pos);
        auto s = mbnim::nim_sum(base, x);
        auto d = mbnim::to_digits(base, s);
        emit(opt, {{"nimsum", s}, {"digits", d}},
             std::to_string(s) + " " + mbnim::digits_to_string(d));
    } else if (cmd_ord->parsed()) {
        auto o = mbnim::ord(base, ord_value);
        if (o.infinite) emit(opt, {{"ord", "inf"}}, "inf");
        else emit(opt, {{"ord", o.value}}, std::to_string(o.value));
    } else if (cmd_carry->parsed()) {
        auto r = mbnim::carry_vector(base, carry_n, carry_h);
        auto d = mbnim::to_digits(base, r);
        emit(opt, {{"carry", r}, {"digits", d}},
             std::to_string(r) + " " + mbnim::digits_to_string(d));
    } else if (cmd_member->parsed()) {
        auto system = mbnim::parse_system(member_system);
        auto c = mbnim::parse_position(member_move);
        bool member = mbnim::is_member(base, system, c);
        json j{{"member", member}};
        std::string plain = member ? "true" : "false";
        if (system.kind == mbnim::SystemKind::Nmin) {
            j["nj"] = mbnim::nj_info_to_json(mbnim::nj_info(base, c));
        } else if (system.kind == mbnim::SystemKind::Max) {
            auto level = mbnim::admissible_level(base, c);
            j["level"] = level;
            j["in_f_level"] = mbnim::in_f_level(base, c, level);
            if (!member) {
                auto witness = mbnim::nonmove_witness(base, c);
                j["witness"] = witness;
                plain += " witness " + mbnim::position_to_string(witness);
            }
        }
        emit(opt, j, plain);
    } else if (cmd_verify->parsed()) {
        auto system = mbnim::parse_system(verify_system_text);
        auto box = mbnim::parse_box(verify_box);
        auto report = mbnim::verify_system(base, system, box.dims(), box);
        emit(opt, mbnim::verify_report_to_json(report),
             mbnim::verify_report_to_json(report).dump());
    } else if (cmd_table->parsed()) {
        auto system = mbnim::parse_system(table_system);
        auto box = mbnim::parse_box(table_box);
        auto table = mbnim::sg_table(base, box, system);
        std::string payload = (opt.output == "tsv")
                                  ? mbnim::sg_table_to_tsv(table)
                                  : mbnim::sg_table_to_json(base, table).dump() + "\n";
        if (!table_out.empty()) {
            std::ofstream out(table_out);
            if (!out) throw mbnim::ParseError("cannot open output file '" + table_out + "'");
            out << payload;
        } else {
            std::cout << payload;
        }
    } else if (cmd_enum->parsed()) {
        auto system = mbnim::parse_system(enum_system);
        auto box = mbnim::parse_box(enum_box);
        auto members = mbnim::enumerate_system(base, system, box);
        if (opt.output == "plain") {
            for (const auto& c : members) std::cout << mbnim::position_to_string(c) << "\n";
        } else {
            std::cout << json(members).dump() << "\n";
        }
    } else if (cmd_best->parsed()) {
        auto x = mbnim::parse_position(best_pos);
        try {
            auto c = mbnim::find_move(base, x, best_target);
            emit(opt, {{"move", c}}, mbnim::position_to_string(c));
        } catch (const mbnim::LosingPositionError&) {
            emit(opt, {{"losing_position", true}}, "losing position");
            return kExitLosing;
        }
    } else if (cmd_audit->parsed()) {
        auto system = mbnim::parse_system(audit_system);
        auto box = mbnim::parse_box(audit_box);
        auto report = mbnim::audit_minimal(base, system, box);
        emit(opt, mbnim::audit_report_to_json(report),
             mbnim::audit_report_to_json(report).dump());
    } else if (cmd_props->parsed()) {
        bool value = false;
        if (props_check == "min-system") value = mbnim::has_minimum_system(base, props_m);
        else if (props_check == "min-symmetric")
            value = mbnim::has_minimum_symmetric_system(base, props_m);
        else value = mbnim::max_equals_ord(base, props_m);
        emit(opt, {{"check", props_check}, {"m", props_m}, {"value", value}},
             value ? "true" : "false");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const mbnim::OverflowError& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return kExitOverflow;
    } catch (const mbnim::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
