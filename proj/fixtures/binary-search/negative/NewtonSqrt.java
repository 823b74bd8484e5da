public class NewtonSqrt {
    static double sqrt(double n) {
        double x = n;
        while (Math.abs(x * x - n) > 1e-9) {
            x = (x + n / x) / 2;
        }
        return x;
    }
}
