#pragma once

#include <stdexcept>
#include <string>

namespace deckard {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad call: size mismatch, index out of range, precondition violated.
struct ArgumentError : Error {
    using Error::Error;
};

// Deck whose cards are internally inconsistent (wrong sizes, wrong count).
struct MalformedDeckError : Error {
    using Error::Error;
};

// Deck that cannot arise from any graph (divisibility or degree bounds fail).
struct IllegitimateDeckError : Error {
    using Error::Error;
};

// Request exceeds a configured size cap.
struct ResourceGuardError : Error {
    using Error::Error;
};

// Weighted input violates the pairwise-distinct-weights requirement.
struct GenericityError : Error {
    using Error::Error;
};

// Three cards that cannot be glued into any consistent weighted graph.
struct InvalidCardsError : Error {
    using Error::Error;
};

// A rebuild procedure produced a graph whose deck does not match the input.
struct ReconstructionFailedError : Error {
    using Error::Error;
};

// Unreadable text input: graph6 string, edge list, JSON schema violation.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace deckard
