#pragma once

#include <stdexcept>
#include <string>

namespace qsocle {

// Base for all domain errors raised by the library. The CLI maps these to
// exit code 1.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class EmptyGenerators : public Error {
public:
  EmptyGenerators() : Error("semigroup generator list is empty") {}
};

class NotCoprime : public Error {
public:
  explicit NotCoprime(long long g)
      : Error("gcd of generators is " + std::to_string(g) +
              " > 1; not a numerical semigroup") {}
};

class ExponentNotInSemigroup : public Error {
public:
  explicit ExponentNotInSemigroup(long long e)
      : Error("exponent " + std::to_string(e) + " is not in the semigroup") {}
};

class EmptyGeneratorList : public Error {
public:
  EmptyGeneratorList() : Error("ideal generator list is empty (zero ideal is not representable)") {}
};

class MixedSemigroups : public Error {
public:
  MixedSemigroups() : Error("operands live over different semigroups") {}
};

class NotContained : public Error {
public:
  NotContained() : Error("relative length requires F to be contained in E") {}
};

class ParameterNotInSemigroup : public Error {
public:
  explicit ParameterNotInSemigroup(long long s)
      : Error("parameter exponent " + std::to_string(s) + " is not a positive element of H") {}
};

class RegularRingRefused : public Error {
public:
  RegularRingRefused() : Error("H = N gives a regular ring; analysis refused") {}
};

class NotAReduction : public Error {
public:
  NotAReduction() : Error("I is not integral over Q; no finite reduction number") {}
};

class HypothesisViolated : public Error {
public:
  explicit HypothesisViolated(const std::string& what) : Error(what) {}
};

class ParameterNotInPower : public Error {
public:
  ParameterNotInPower(long long s, long long q)
      : Error("t^" + std::to_string(s) + " does not lie in m^" + std::to_string(q)) {}
};

class StabilizationNotReached : public Error {
public:
  StabilizationNotReached() : Error("Ratliff-Rush chain did not stabilize before the hard cap") {}
};

}  // namespace qsocle
