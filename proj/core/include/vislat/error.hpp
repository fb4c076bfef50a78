#pragma once

#include <stdexcept>
#include <string>

namespace vislat {

enum class Errc
{
	EmptyPolynomial,
	LeadingZero,
	NegativeCoefficient,
	GcdNotOne,
	ValueOverflow,
	ModulusTooLarge,
	NotPrime,
	PrimeBoundTooSmall,
	GridTooLargeForDedup,
	TooManyTerms,
	InvalidArgument,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error
{
public:
	Error(Errc code, const std::string& what) : std::runtime_error(what), _code(code) {}

	Errc code() const noexcept { return _code; }

private:
	Errc _code;
};

} // namespace vislat
