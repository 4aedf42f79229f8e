#pragma once

#include <stdexcept>
#include <string>

namespace p3dec {

/// code() is a stable one-token name used in CLI diagnostics and tests.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
    virtual const char* code() const { return "Error"; }
};

struct loop_arc_error : error {
    int arc_index;
    explicit loop_arc_error(int index)
        : error("loop arc at index " + std::to_string(index)), arc_index(index) {}
    const char* code() const override { return "LoopArc"; }
};

struct parallel_arc_error : error {
    int arc_index;
    explicit parallel_arc_error(int index)
        : error("parallel arc at index " + std::to_string(index)), arc_index(index) {}
    const char* code() const override { return "ParallelArc"; }
};

struct vertex_out_of_range_error : error {
    explicit vertex_out_of_range_error(const std::string& what) : error(what) {}
    const char* code() const override { return "VertexOutOfRange"; }
};

struct invalid_partition_error : error {
    explicit invalid_partition_error(const std::string& what) : error(what) {}
    const char* code() const override { return "InvalidPartition"; }
};

struct infeasible_params_error : error {
    explicit infeasible_params_error(const std::string& what) : error(what) {}
    const char* code() const override { return "InfeasibleParams"; }
};

struct isolated_vertex_error : error {
    int vertex;
    explicit isolated_vertex_error(int v)
        : error("isolated vertex " + std::to_string(v)), vertex(v) {}
    const char* code() const override { return "IsolatedVertex"; }
};

struct precondition_error : error {
    explicit precondition_error(const std::string& what) : error(what) {}
    const char* code() const override { return "PreconditionViolated"; }
};

struct not_tournament_error : error {
    not_tournament_error() : error("digraph is not a tournament") {}
    const char* code() const override { return "NotTournament"; }
};

struct odd_size_error : error {
    int arc_count;
    explicit odd_size_error(int m)
        : error("tournament has odd size " + std::to_string(m)), arc_count(m) {}
    const char* code() const override { return "OddSize"; }
};

struct not_bipartite_error : error {
    explicit not_bipartite_error(const std::string& what) : error(what) {}
    const char* code() const override { return "NotBipartite"; }
};

struct has_perfect_matching_error : error {
    has_perfect_matching_error() : error("graph has a perfect matching") {}
    const char* code() const override { return "HasPerfectMatching"; }
};

struct no_violator_error : error {
    no_violator_error() : error("every left vertex is matched") {}
    const char* code() const override { return "NoViolator"; }
};

struct not_eulerian_error : error {
    explicit not_eulerian_error(const std::string& what) : error(what) {}
    const char* code() const override { return "NotEulerian"; }
};

struct too_small_error : error {
    explicit too_small_error(const std::string& what) : error(what) {}
    const char* code() const override { return "TooSmall"; }
};

struct policy_mismatch_error : error {
    explicit policy_mismatch_error(const std::string& what) : error(what) {}
    const char* code() const override { return "PolicyMismatch"; }
};

struct budget_exceeded_error : error {
    explicit budget_exceeded_error(const std::string& what) : error(what) {}
    const char* code() const override { return "BudgetExceeded"; }
};

struct certificate_search_exhausted_error : error {
    explicit certificate_search_exhausted_error(const std::string& what) : error(what) {}
    const char* code() const override { return "CertificateSearchExhausted"; }
};

struct witness_search_exhausted_error : error {
    explicit witness_search_exhausted_error(const std::string& what) : error(what) {}
    const char* code() const override { return "WitnessSearchExhausted"; }
};

struct parse_error : error {
    int line;
    parse_error(int line_number, const std::string& reason)
        : error("line " + std::to_string(line_number) + ": " + reason), line(line_number) {}
    const char* code() const override { return "ParseError"; }
};

}  // namespace p3dec
