#pragma once

#include <braidkit/dynnikov.hpp>
#include <braidkit/error.hpp>
#include <braidkit/gridnf.hpp>
#include <braidkit/handle.hpp>
#include <braidkit/oracle.hpp>
#include <braidkit/redress.hpp>
#include <braidkit/simple.hpp>
#include <braidkit/word.hpp>
