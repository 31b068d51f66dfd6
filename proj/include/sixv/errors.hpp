#ifndef SIXV_ERRORS_HPP
#define SIXV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sixv {

// Invalid input (parameter outside its mathematical domain).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

// Evaluation requested at (or too close to) a pole of a rational identity.
class pole_error : public std::runtime_error {
public:
    explicit pole_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Working precision exhausted (e.g. non-positive Hankel pivot after retries).
class precision_error : public std::runtime_error {
public:
    precision_error(const std::string& msg, long bits_reached)
        : std::runtime_error(msg), bits_reached(bits_reached) {}
    long bits_reached;
};

// Adaptive quadrature failed to converge to the requested tolerance.
class quadrature_error : public std::runtime_error {
public:
    explicit quadrature_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace sixv

#endif
