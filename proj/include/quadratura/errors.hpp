#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace quadratura {

// Base class for all domain errors. `name()` is the stable identifier
// reported by the CLI; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
   public:
	Error(std::string name, const std::string& detail)
	    : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

	const std::string& name() const { return name_; }

   private:
	std::string name_;
};

#define QUADRATURA_ERROR(NAME)                                    \
	class NAME : public Error {                                   \
	   public:                                                    \
		explicit NAME(const std::string& detail)                  \
		    : Error(#NAME, detail) {}                             \
	}

QUADRATURA_ERROR(InvalidParameter);
QUADRATURA_ERROR(InvalidTiling);
QUADRATURA_ERROR(ParseError);
QUADRATURA_ERROR(NotPrime);
QUADRATURA_ERROR(Infeasible);
QUADRATURA_ERROR(LimitReached);
QUADRATURA_ERROR(DegenerateSystem);
QUADRATURA_ERROR(MissingYLink);
QUADRATURA_ERROR(DuplicateVariant);
QUADRATURA_ERROR(InfeasibleAssignment);
QUADRATURA_ERROR(MissingDivisorData);

#undef QUADRATURA_ERROR

}  // namespace quadratura
