#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pad {

// Input SQL fell outside the supported grammar. Carries the byte offset of
// the offending token, what the parser expected, and what it found.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t position, std::string expected, std::string found)
        : std::runtime_error("syntax error at offset " + std::to_string(position) +
                             ": expected " + expected + ", found " +
                             (found.empty() ? "end of input" : "'" + found + "'")),
          position_(position),
          expected_(std::move(expected)),
          found_(std::move(found)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }
    const std::string& found() const noexcept { return found_; }

private:
    std::size_t position_;
    std::string expected_;
    std::string found_;
};

// A line-oriented input (CSV, JSONL) broke its framing. `line` is 1-based.
class FormatError : public std::runtime_error {
public:
    FormatError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class UnknownRelation : public std::runtime_error {
public:
    explicit UnknownRelation(const std::string& name)
        : std::runtime_error("unknown relation '" + name + "'"), name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class UnknownAttribute : public std::runtime_error {
public:
    UnknownAttribute(const std::string& relation, const std::string& name)
        : std::runtime_error("unknown attribute '" + name + "' in relation '" + relation + "'"),
          name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// Window size requested for an n-gram profile was < 1.
class InvalidN : public std::runtime_error {
public:
    explicit InvalidN(int n) : std::runtime_error("invalid n-gram size " + std::to_string(n)), n_(n) {}

    int n() const noexcept { return n_; }

private:
    int n_;
};

// Two n-gram profiles with different window sizes were compared.
class NMismatch : public std::runtime_error {
public:
    NMismatch(int run_n, int norm_n)
        : std::runtime_error("n-gram size mismatch: run profile has n=" + std::to_string(run_n) +
                             ", normative profile has n=" + std::to_string(norm_n)),
          run_n_(run_n),
          norm_n_(norm_n) {}

    int run_n() const noexcept { return run_n_; }
    int norm_n() const noexcept { return norm_n_; }

private:
    int run_n_;
    int norm_n_;
};

// Profiles built under different quasi-identifier configurations were mixed.
class ConfigMismatch : public std::runtime_error {
public:
    explicit ConfigMismatch(const std::string& what) : std::runtime_error(what) {}
};

// First failing entry while mapping a parser over a log.
class LogParseError : public std::runtime_error {
public:
    LogParseError(std::size_t index, const SyntaxError& cause)
        : std::runtime_error("entry " + std::to_string(index) + ": " + cause.what()),
          index_(index),
          cause_(cause) {}

    std::size_t index() const noexcept { return index_; }
    const SyntaxError& cause() const noexcept { return cause_; }

private:
    std::size_t index_;
    SyntaxError cause_;
};

}  // namespace pad
