public class Power {
    static long power(long base, int exponent) {
        long result = 1;
        while (exponent > 0) {
            result *= base;
            exponent--;
        }
        return result;
    }
}
