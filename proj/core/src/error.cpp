#include "rncdr/error.hpp"

namespace rncdr {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotRDK: return "NotRDK";
    case ErrorKind::NonNumeric: return "NonNumeric";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotCycleTerminal: return "NotCycleTerminal";
    case ErrorKind::NoConservation: return "NoConservation";
    case ErrorKind::DegenerateOperatingPoint: return "DegenerateOperatingPoint";
    case ErrorKind::NonPositiveV: return "NonPositiveV";
    case ErrorKind::InvalidStep: return "InvalidStep";
    case ErrorKind::NotBECCS: return "NotBECCS";
    case ErrorKind::QDifferenceZero: return "QDifferenceZero";
    case ErrorKind::UnknownModel: return "UnknownModel";
    case ErrorKind::UnsupportedPortfolioSize: return "UnsupportedPortfolioSize";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::StepSizeUnderflow: return "StepSizeUnderflow";
    case ErrorKind::NoEquilibriumFound: return "NoEquilibriumFound";
    case ErrorKind::Unrealizable: return "Unrealizable";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Schema: return "Schema";
  }
  return "Unknown";
}

}  // namespace rncdr
