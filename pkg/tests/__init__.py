# Stream Join Test Suite
