#pragma once

#include <stdexcept>
#include <string>

namespace ph {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define PH_ERROR(Name)                                                         \
    class Name : public Error {                                                \
    public:                                                                    \
        using Error::Error;                                                    \
    }

PH_ERROR(MissingFace);
PH_ERROR(NonMonotone);
PH_ERROR(BadScale);
PH_ERROR(NeedsCoordinates);
PH_ERROR(EmptyLandmarks);
PH_ERROR(BadNu);
PH_ERROR(BadCount);
PH_ERROR(EmptyGraph);
PH_ERROR(Disconnected);
PH_ERROR(UnsupportedDim);
PH_ERROR(BadP);
PH_ERROR(BadFrame);
PH_ERROR(BadParams);
PH_ERROR(IoError);
PH_ERROR(ComplexTooLarge);

#undef PH_ERROR

} // namespace ph
