// Command-line front end for libqmds. Exit codes: 0 on success, 1 when a
// verification run falsifies an instance, 2 on usage or validation errors.

#include <cstdint>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "qmds.h"

namespace {

qmds_family parse_family(const std::string& s) {
    if (s == "even") return QMDS_FAMILY_EVEN;
    if (s == "odd") return QMDS_FAMILY_ODD;
    return QMDS_FAMILY_BOTH;
}

qmds_format parse_format(const std::string& s) {
    if (s == "json") return QMDS_FORMAT_JSON;
    if (s == "csv") return QMDS_FORMAT_CSV;
    return QMDS_FORMAT_TEXT;
}

int report_failure(qmds_status status, char* errmsg) {
    std::fprintf(stderr, "error: %s%s%s\n", qmds_status_name(status), errmsg ? ": " : "",
                 errmsg ? errmsg : "");
    qmds_string_free(errmsg);
    return (status == QMDS_ERR_VERIFICATION_FAILED || status == QMDS_ERR_EQUIVALENCE_VIOLATION) ? 1 : 2;
}

int emit(qmds_status status, char* out, char* errmsg) {
    if (out) {
        std::fputs(out, stdout);
        qmds_string_free(out);
    }
    if (status == QMDS_OK) {
        qmds_string_free(errmsg);
        return 0;
    }
    return report_failure(status, errmsg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructor and verifier for quantum MDS codes from constacyclic codes"};
    app.require_subcommand(1);

    long long q = 0, r = 0, d = 0, trials = 200;
    std::uint64_t budget = 1000000, seed = 1;
    std::string family = "both", format;
    bool new_only = false;

    CLI::App* cmd_enumerate = app.add_subcommand("enumerate", "list all code parameters for a given q");
    cmd_enumerate->add_option("--q", q, "field parameter, an odd prime power")->required();
    cmd_enumerate->add_option("--family", family, "even, odd, or both")
        ->check(CLI::IsMember({"even", "odd", "both"}));
    cmd_enumerate->add_option("--format", format, "json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->default_val("text");
    cmd_enumerate->add_flag("--new-only", new_only, "only rows beyond previously known ranges");

    CLI::App* cmd_build = app.add_subcommand("build", "construct a single code instance");
    cmd_build->add_option("--q", q, "field parameter, an odd prime power")->required();
    cmd_build->add_option("--r", r, "divisor of q+1 selecting the family by parity")->required();
    cmd_build->add_option("--d", d, "designed distance")->required();
    cmd_build->add_option("--format", format, "json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->default_val("json");

    CLI::App* cmd_verify = app.add_subcommand("verify", "certify distances and crosscheck dual containment");
    cmd_verify->add_option("--q", q, "field parameter, an odd prime power")->required();
    cmd_verify->add_option("--family", family, "even, odd, or both")
        ->check(CLI::IsMember({"even", "odd", "both"}));
    cmd_verify->add_option("--budget", budget, "max exhaustive minor subsets; above it, sample this many");
    cmd_verify->add_option("--seed", seed, "seed for sampling and the randomized crosscheck");
    cmd_verify->add_option("--trials", trials, "random defining sets per shape in the crosscheck");
    cmd_verify->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->default_val("json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    char* out = nullptr;
    char* errmsg = nullptr;
    if (cmd_enumerate->parsed()) {
        const qmds_status st =
            qmds_enumerate(q, parse_family(family), new_only ? 1 : 0, parse_format(format), &out, &errmsg);
        return emit(st, out, errmsg);
    }
    if (cmd_build->parsed()) {
        const qmds_status st = qmds_build_record(q, r, d, parse_format(format), &out, &errmsg);
        return emit(st, out, errmsg);
    }
    int verified = 0;
    const qmds_status st =
        qmds_verify(q, parse_family(family), budget, seed, trials, parse_format(format), &verified, &out, &errmsg);
    return emit(st, out, errmsg);
}
