#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ljlab
{

enum class ErrorKind
{
	NotHermitian,
	DimensionMismatch,
	NotInSpan,
	EmptyInput,
	MaxRoundsExceeded,
	NotClosed,
	NotAssociative,
	InvalidDim,
	InvalidState,
	CriteriaDisagree,
	Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the toolkit carries a machine-readable kind.
class Error : public std::runtime_error
{
public:
	Error(ErrorKind kind, const std::string& what)
	    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
	{
	}

	[[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
	ErrorKind kind_;
};

} // namespace ljlab
