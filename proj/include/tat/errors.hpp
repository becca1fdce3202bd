#pragma once

#include <stdexcept>
#include <string>

namespace tat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : Error {
  std::string kind;
  int witness;
  ValidationError(std::string k, int w, const std::string& detail)
      : Error("validation failed [" + k + "] at " + std::to_string(w) + ": " + detail),
        kind(std::move(k)),
        witness(w) {}
};

struct DisconnectedGraph : Error {
  DisconnectedGraph() : Error("graph is disconnected") {}
};

struct OffsetOutOfRange : Error {
  OffsetOutOfRange() : Error("offset must lie strictly inside the edge") {}
};

struct StartAtVertex : Error {
  StartAtVertex() : Error("walk must start in the interior of an edge") {}
};

struct NotTat : Error {
  NotTat() : Error("graph does not have the tete-a-tete property") {}
};

struct NotAutomorphism : Error {
  explicit NotAutomorphism(const std::string& why) : Error("not a ribbon automorphism: " + why) {}
};

struct NotCoprime : Error {
  NotCoprime() : Error("rotation numerator and order are not coprime") {}
};

struct NotNormalized : Error {
  NotNormalized() : Error("Seifert pair is not normalized") {}
};

struct NonIntegralEuler : Error {
  explicit NonIntegralEuler(const std::string& sum)
      : Error("sum of beta/alpha is " + sum + ", not an integer") {}
};

struct BadPair : Error {
  BadPair() : Error("continued fraction needs coprime 0 < beta < alpha") {}
};

struct DivisionByZero : Error {
  int depth;
  explicit DivisionByZero(int d)
      : Error("division by zero in continued fraction at depth " + std::to_string(d)), depth(d) {}
};

struct EmptyChain : Error {
  EmptyChain() : Error("empty chain") {}
};

struct NotStarShaped : Error {
  explicit NotStarShaped(const std::string& why) : Error("plumbing graph is not star-shaped: " + why) {}
};

struct Disconnected : Error {
  Disconnected() : Error("orbit graph is disconnected") {}
};

struct OrderMismatch : Error {
  OrderMismatch() : Error("lcm of isotropy orders does not divide the order") {}
};

struct ClosedManifold : Error {
  ClosedManifold() : Error("base surface has no boundary") {}
};

struct ReducibleClass : Error {
  int copies;
  explicit ReducibleClass(int c)
      : Error("class is reducible into " + std::to_string(c) + " components"), copies(c) {}
};

struct Infeasible : Error {
  std::string system;
  explicit Infeasible(std::string sys)
      : Error("no tete-a-tete metric found\n" + sys), system(std::move(sys)) {}
};

}  // namespace tat
