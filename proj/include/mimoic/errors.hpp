// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace mimoic {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotPositiveDefinite : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class InvalidSpec : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class NegativeParameter : public Error {
public:
    using Error::Error;
};

class Unbounded : public Error {
public:
    using Error::Error;
};

class IllConditionedSweep : public Error {
public:
    using Error::Error;
};

/// Malformed input document (channel/region JSON).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace mimoic
