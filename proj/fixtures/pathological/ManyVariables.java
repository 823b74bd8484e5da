public class ManyVariables {
    public int churn() {
        int a0 = 0; int a1 = 1; int a2 = 2; int a3 = 3; int a4 = 4;
        int a5 = 5; int a6 = 6; int a7 = 7; int a8 = 8; int a9 = 9;
        int b0 = 0; int b1 = 1; int b2 = 2; int b3 = 3; int b4 = 4;
        int b5 = 5; int b6 = 6; int b7 = 7; int b8 = 8; int b9 = 9;
        int c0 = 0; int c1 = 1; int c2 = 2; int c3 = 3; int c4 = 4;
        int c5 = 5; int c6 = 6; int c7 = 7; int c8 = 8; int c9 = 9;
        int sumA = a0 + a1 + a2 + a3 + a4 + a5 + a6 + a7 + a8 + a9;
        int sumB = b0 + b1 + b2 + b3 + b4 + b5 + b6 + b7 + b8 + b9;
        int sumC = c0 + c1 + c2 + c3 + c4 + c5 + c6 + c7 + c8 + c9;
        return sumA + sumB + sumC;
    }
}
