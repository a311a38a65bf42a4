#pragma once

#define AGNOSTO_VERSION "0.1.0"
