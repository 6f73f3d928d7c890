#pragma once

#include <stdexcept>
#include <string>

namespace tpbs {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class ParamError : public Error {
public:
    using Error::Error;
};

// Malformed bytes on the wire or on disk.
class DecodeError : public Error {
public:
    using Error::Error;
};

class SamplerError : public Error {
public:
    using Error::Error;
};

class LinearAlgebraError : public Error {
public:
    using Error::Error;
};

// A file could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace tpbs
