#pragma once

#include "hodgedec/simplicial_complex.hpp"

#include <string>

namespace hodgedec {

enum class MeshFormat { Off, ComplexJson };

/// ASCII OFF reader: header "OFF", counts "V F E", V coordinate lines,
/// F triangle lines "3 i j k". Throws ParseError / NonManifold /
/// NonOrientable; the returned complex passes validate().
SimplicialComplex loadOff(const std::string& path);

/// complex-JSON reader: { "dim": n, "vertices": [[x,y,...],...],
/// "cells": [[v0..vn],...] }; lower simplices derived.
SimplicialComplex loadComplexJson(const std::string& path);

/// Dispatch on format; Off only supports dim-2 complexes.
SimplicialComplex loadMesh(const std::string& path, MeshFormat format);
/// Format guessed from the file extension (.off / .json).
SimplicialComplex loadMesh(const std::string& path);

/// Canonical JSON serialization: fixed key order, cells emitted as sorted
/// vertex tuples in lexicographic order. Identical complexes serialize
/// byte-for-byte identically.
std::string toCanonicalJson(const SimplicialComplex& K);

void saveComplexJson(const SimplicialComplex& K, const std::string& path);
void saveOff(const SimplicialComplex& K, const std::string& path);

}  // namespace hodgedec
