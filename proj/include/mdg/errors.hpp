#pragma once

#include <stdexcept>
#include <string>

namespace mdg {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class RingMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class NotDivisible : public Error {
public:
    using Error::Error;
};

class UndefinedProduct : public Error {
public:
    UndefinedProduct(const std::string& what, int a, int b) : Error(what), left(a), right(b) {}
    int left;
    int right;
};

class StructureError : public Error {
public:
    using Error::Error;
};

class MathError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int col, std::string token)
        : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg +
                (token.empty() ? std::string() : " near '" + token + "'")),
          line(line), col(col), token(std::move(token)) {}
    int line;
    int col;
    std::string token;
};

}  // namespace mdg
